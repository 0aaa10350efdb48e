import init, { Demo } from "./pkg/mhide_wasm.js";

const $ = (id) => document.getElementById(id);
let demo = null;
let highlight = { evader: null, added: [] };

function fail(e) {
  $("error").textContent = String(e.message ?? e);
}

function table(rows, cols) {
  const head = cols.map((c) => `<th>${c}</th>`).join("");
  const body = rows.map((r) => "<tr>" + cols.map((c) => `<td>${r[c]}</td>`).join("") + "</tr>").join("");
  return `<table><tr>${head}</tr>${body}</table>`;
}

// One panel per layer, nodes on a circle at the same angle in every panel so
// couplings line up horizontally.
function draw() {
  const canvas = $("view");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!demo) return;
  const g = JSON.parse(demo.graphJson());
  const L = g.layers.length, n = g.nodes.length;
  const w = canvas.width / L, r = Math.min(w, canvas.height) * 0.4;
  const pos = (v, a) => {
    const t = (2 * Math.PI * v) / n;
    return [w * a + w / 2 + r * Math.cos(t), canvas.height / 2 + r * Math.sin(t)];
  };
  const evader = highlight.evader === null ? -1 : g.nodes.indexOf(highlight.evader);

  ctx.strokeStyle = "rgba(120,120,200,0.15)";
  for (const [v, a, b] of g.couplings) {
    ctx.beginPath(); ctx.moveTo(...pos(v, a)); ctx.lineTo(...pos(v, b)); ctx.stroke();
  }
  // the evader's original edges are dashed once it has been rewired
  for (const [a, u, v] of g.edges) {
    const cut = u === evader || v === evader;
    ctx.strokeStyle = cut ? "rgba(210,30,30,0.5)" : "rgba(0,0,0,0.35)";
    ctx.setLineDash(cut ? [3, 3] : []);
    ctx.beginPath(); ctx.moveTo(...pos(u, a)); ctx.lineTo(...pos(v, a)); ctx.stroke();
  }
  ctx.setLineDash([]);
  ctx.strokeStyle = "#d22";
  ctx.lineWidth = 2;
  for (const [c, l] of highlight.added) {
    const a = g.layers.indexOf(l);
    ctx.beginPath(); ctx.moveTo(...pos(evader, a)); ctx.lineTo(...pos(g.nodes.indexOf(c), a)); ctx.stroke();
  }
  ctx.lineWidth = 1;
  for (const [v, a] of g.occurrences) {
    const [x, y] = pos(v, a);
    ctx.fillStyle = v === evader ? "#d22" : "#246";
    ctx.beginPath(); ctx.arc(x, y, v === evader ? 5 : 3, 0, 2 * Math.PI); ctx.fill();
  }
  ctx.fillStyle = "#000";
  g.layers.forEach((name, a) => ctx.fillText(`layer ${name}`, w * a + 8, 14));
}

function generate() {
  $("error").textContent = "";
  try {
    demo = Demo.generate($("model").value, +$("n").value, +$("k").value, +$("layers").value, BigInt($("seed").value));
    highlight = { evader: null, added: [] };
    $("trial").innerHTML = "";
    rank();
  } catch (e) { fail(e); }
}

function rank() {
  if (!demo) return;
  try {
    const rows = JSON.parse(demo.centrality($("measure").value));
    rows.forEach((r) => (r.score = r.score.toFixed(3)));
    $("ranking").innerHTML = `<h3>${$("measure").value}</h3>` + table(rows.slice(0, 15), ["rank", "node", "score"]);
    if (!$("evader").value && rows.length) $("evader").value = rows[0].node;
    draw();
  } catch (e) { fail(e); }
}

function hide() {
  if (!demo) return;
  $("error").textContent = "";
  try {
    const t = JSON.parse(demo.hide($("evader").value, $("heuristic").value, BigInt($("seed").value)));
    highlight = { evader: $("evader").value, added: t.assignment };
    const pairs = t.assignment.map(([c, l]) => `${c}@${l}`).join(", ") || "none";
    $("trial").innerHTML =
      `<h3>hiding ${$("evader").value}</h3><p>reconnected: ${pairs}</p>` +
      table(t.ranks, ["measure", "before", "after", "delta"]);
    draw();
  } catch (e) { fail(e); }
}

await init();
$("gen").onclick = generate;
$("rank").onclick = rank;
$("hide").onclick = hide;
generate();
