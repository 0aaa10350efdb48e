/* tslint:disable */
/* eslint-disable */

export class Demo {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Rows `{node, score, rank}` sorted by rank. `measure` is e.g.
     * `global-closeness` or `local-degree` (aggregated over layers).
     */
    centrality(measure: string): string;
    static fromText(text: string): Demo;
    /**
     * `model` is one of `er`, `ws`, `ba`.
     */
    static generate(model: string, n: number, k: number, layers: number, seed: bigint): Demo;
    /**
     * Nodes, layers, occurrences `[node, layer]`, edges `[layer, u, v]` and
     * couplings `[node, layer, layer]`, all by index.
     */
    graphJson(): string;
    /**
     * Cuts the evader's edges, reconnects it with `heuristic` and reports
     * its rank under every experiment measure before and after.
     */
    hide(evader: string, heuristic: string, seed: bigint): string;
    text(): string;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly demo_centrality: (a: number, b: number, c: number) => [number, number, number, number];
    readonly demo_fromText: (a: number, b: number) => [number, number, number];
    readonly demo_generate: (a: number, b: number, c: number, d: number, e: number, f: bigint) => [number, number, number];
    readonly demo_graphJson: (a: number) => [number, number];
    readonly demo_hide: (a: number, b: number, c: number, d: number, e: number, f: bigint) => [number, number, number, number];
    readonly demo_text: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
