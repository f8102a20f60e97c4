import init, { bounds_table, explore_witness, trace_run } from "./pkg/sweepperm_web.js";

const $ = (id) => document.getElementById(id);

function showError(el, msg) {
  el.className = "error";
  el.textContent = msg;
}

function showTable() {
  const out = $("table");
  const rows = JSON.parse(bounds_table(Number($("max-n").value)));
  if (rows.error) return showError(out, rows.error);
  out.className = "";
  const head = "<tr><th>n</th><th>F</th><th>phi</th><th>kapoutsis</th></tr>";
  const body = rows
    .map((r) => `<tr><td>${r.n}</td><td>${r.f}</td><td>${r.phi}</td><td>${r.kapoutsis}</td></tr>`)
    .join("");
  out.innerHTML = `<table>${head}${body}</table>`;
}

function explore() {
  const out = $("witness");
  const r = JSON.parse(explore_witness(Number($("wk").value), Number($("wl").value), Number($("wm").value)));
  if (r.error) return showError(out, r.error);
  out.className = "";
  out.textContent =
    `G(${r.k}, ${r.l}, ${r.m}) = ${r.g}\n` +
    `reachable one-way states: ${r.reachable}\n` +
    `minimal one-way states:   ${r.minimal}\n` +
    `minimal is a permutation automaton: ${r.permutation}`;
}

// Time runs down the canvas, tape cells across it.
function drawTrace(t) {
  const canvas = $("sweeps");
  const ctx = canvas.getContext("2d");
  const cells = t.symbols.length + 2;
  const cellW = canvas.width / cells;
  const rowH = Math.max(2, Math.min(20, (canvas.height - 30) / Math.max(1, t.steps.length)));
  canvas.height = Math.max(300, 30 + rowH * t.steps.length);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = "14px monospace";
  ctx.textAlign = "center";
  ["⊢", ...t.symbols, "⊣"].forEach((s, i) => ctx.fillText(s, (i + 0.5) * cellW, 18));
  ctx.lineWidth = 2;
  t.steps.forEach((s, i) => {
    const x = (s.position + 0.5) * cellW;
    const y = 30 + i * rowH;
    ctx.fillStyle = s.plus ? "#1565c0" : "#c62828";
    ctx.beginPath();
    ctx.arc(x, y, 3, 0, 2 * Math.PI);
    ctx.fill();
    if (i > 0) {
      const p = t.steps[i - 1];
      ctx.strokeStyle = "#999";
      ctx.beginPath();
      ctx.moveTo((p.position + 0.5) * cellW, y - rowH);
      ctx.lineTo(x, y);
      ctx.stroke();
    }
  });
}

function trace() {
  const out = $("verdict");
  const t = JSON.parse(trace_run($("automaton").value, $("word").value));
  if (t.error) return showError(out, t.error);
  out.className = "";
  out.textContent = `${t.verdict} after ${t.steps.length - 1} steps (blue: right-moving, red: left-moving)`;
  drawTrace(t);
}

await init();
$("show-table").onclick = showTable;
$("explore").onclick = explore;
$("trace").onclick = trace;
showTable();
