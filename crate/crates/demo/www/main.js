import init, { analyze, slice, degree_stats } from "./pkg/boardnet_demo.js";

const $ = (id) => document.getElementById(id);
const palette = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

function run(op) {
  $("status").textContent = "";
  $("status").className = "";
  try {
    return JSON.parse(op());
  } catch (e) {
    $("status").textContent = e.message ?? String(e);
    $("status").className = "error";
    return null;
  }
}

function draw(view) {
  const canvas = $("graph");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const n = view.vertices.length;
  if (n === 0) return;
  const cx = canvas.width / 2, cy = canvas.height / 2, r = cx - 70;
  const pos = view.vertices.map((_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
  });
  ctx.strokeStyle = "#555";
  for (const l of view.lines) {
    ctx.lineWidth = l.value;
    ctx.beginPath();
    ctx.moveTo(...pos[l.source]);
    ctx.lineTo(...pos[l.target]);
    ctx.stroke();
  }
  ctx.font = "11px system-ui";
  view.vertices.forEach((v, i) => {
    const [x, y] = pos[i];
    ctx.fillStyle = palette[v.component % palette.length];
    ctx.beginPath();
    ctx.arc(x, y, 6, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillStyle = "#000";
    ctx.textAlign = x < cx ? "right" : "left";
    ctx.fillText(v.id, x + (x < cx ? -9 : 9), y + 4);
  });
}

function showSlice() {
  const m = Number($("m").value);
  $("m-value").textContent = m;
  const view = run(() => slice($("input").value, m, $("fold").checked));
  if (!view) return null;
  draw(view);
  return view;
}

$("analyze").onclick = () => {
  const report = run(() => analyze($("input").value, $("fold").checked));
  if (!report) return;
  const max = Math.max(1, report.lineMultiplicity.maxValue);
  $("m").max = max;
  if (Number($("m").value) > max) $("m").value = 1;
  showSlice();
  $("output").textContent = JSON.stringify(report, null, 2);
};

$("m").oninput = () => {
  const view = showSlice();
  if (view) $("output").textContent = JSON.stringify(view.components, null, 2);
};

$("stats").onclick = () => {
  const stats = run(() => degree_stats($("input").value));
  if (stats) $("output").textContent = JSON.stringify(stats, null, 2);
};

await init();
$("analyze").click();
