// Generated by `wasm-bindgen --target web --out-dir www/pkg`.
import init, { moment, moment_curve, radial_density, uncertainty_report } from "./pkg/hydromoments_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function state() {
  return [num("d"), num("n"), num("l"), num("z")];
}

function fail(el, obj) {
  el.innerHTML = "";
  el.className = "err";
  el.textContent = obj.error;
}

// Minimal line plot: one or more polylines on shared axes; null breaks a line.
function plot(canvas, xs, series, { logY = false, xLabel = "", marks = [] } = {}) {
  const dpr = window.devicePixelRatio || 1;
  const w = canvas.clientWidth, h = canvas.clientHeight;
  canvas.width = w * dpr;
  canvas.height = h * dpr;
  const g = canvas.getContext("2d");
  g.scale(dpr, dpr);
  g.clearRect(0, 0, w, h);
  const pad = { l: 60, r: 10, t: 10, b: 30 };
  const f = (v) => (v == null || !isFinite(v) || (logY && v <= 0) ? null : logY ? Math.log10(v) : v);
  const ys = series.flatMap((s) => s.ys.map(f)).filter((v) => v != null);
  if (ys.length === 0) return;
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (!logY) y0 = Math.min(y0, 0);
  if (y1 === y0) y1 = y0 + 1;
  const [x0, x1] = [xs[0], xs[xs.length - 1]];
  const px = (x) => pad.l + ((x - x0) / (x1 - x0)) * (w - pad.l - pad.r);
  const py = (y) => h - pad.b - ((y - y0) / (y1 - y0)) * (h - pad.t - pad.b);

  g.strokeStyle = "#999";
  g.strokeRect(pad.l, pad.t, w - pad.l - pad.r, h - pad.t - pad.b);
  g.fillStyle = "#444";
  g.font = "11px system-ui";
  g.fillText(xLabel, w / 2, h - 8);
  g.fillText(x0.toPrecision(3), pad.l, h - 15);
  g.fillText(x1.toPrecision(3), w - pad.r - 30, h - 15);
  const yTick = (v) => (logY ? "1e" + v.toFixed(1) : v.toPrecision(3));
  g.fillText(yTick(y1), 4, pad.t + 10);
  g.fillText(yTick(y0), 4, h - pad.b);

  for (const m of marks) {
    if (m < x0 || m > x1) continue;
    g.strokeStyle = "#d88";
    g.setLineDash([4, 4]);
    g.beginPath();
    g.moveTo(px(m), pad.t);
    g.lineTo(px(m), h - pad.b);
    g.stroke();
    g.setLineDash([]);
  }
  for (const s of series) {
    g.strokeStyle = s.color;
    g.lineWidth = 1.5;
    g.beginPath();
    let pen = false;
    s.ys.forEach((v, i) => {
      const y = f(v);
      if (y == null) { pen = false; return; }
      if (pen) g.lineTo(px(xs[i]), py(y)); else g.moveTo(px(xs[i]), py(y));
      pen = true;
    });
    g.stroke();
  }
}

function runMoment() {
  const out = $("m-out");
  const rec = JSON.parse(moment($("m-space").value, ...state(), num("m-alpha"), $("m-mode").value));
  if (rec.error) return fail(out, rec);
  const r = rec.result;
  if (r.kind === "failure") return fail(out, { error: `${r.status}: ${r.message}` });
  out.className = "ok";
  const exact = r.exact ? `${r.exact.coeff} · π^(${r.exact.piPow}) = ` : "";
  const bound = r.exact ? "" : ` ± ${r.errorBound.toExponential(1)}`;
  out.textContent = `${exact}${r.decimal}${bound}  [${r.method}]`;
}

function runCurve() {
  const note = $("c-note");
  const res = JSON.parse(moment_curve($("c-space").value, ...state(), num("c-lo"), num("c-hi"), 281));
  if (res.error) return fail(note, res);
  note.className = "";
  const hi = res.domainUpper == null ? "∞" : res.domainUpper;
  note.textContent = `<${res.space}^α> on a log scale; finite for α in (${res.domainLower}, ${hi}).`;
  const xs = res.points.map((p) => p.alpha);
  const marks = [res.domainLower, res.domainUpper].filter((m) => m != null);
  plot($("c-plot"), xs, [{ ys: res.points.map((p) => p.value), color: "#1565c0" }], { logY: true, xLabel: "α", marks });
}

function runDensity() {
  const note = $("d-note");
  const res = JSON.parse(radial_density(...state(), 600));
  if (res.error) return fail(note, res);
  note.className = "";
  note.textContent = `<r> = ${res.meanR.toPrecision(8)},  <p> = ${res.meanP.toPrecision(8)}`;
  plot($("d-pos"), res.r, [{ ys: res.position, color: "#2e7d32" }], { xLabel: "r", marks: [res.meanR] });
  plot($("d-mom"), res.p, [{ ys: res.momentum, color: "#6a1b9a" }], { xLabel: "p", marks: [res.meanP] });
}

function runUncertainty() {
  const out = $("u-out");
  const res = JSON.parse(uncertainty_report(...state(), num("u-a"), num("u-b"), num("u-alpha"), num("u-k")));
  if (res.error) return fail(out, res);
  out.className = "";
  const rows = res.reports.map((r) => {
    const rel = r.orientation === "lower" ? "≥" : "≤";
    const cls = r.satisfied ? "ok" : "err";
    return `<tr><td style="text-align:left">${r.name}</td><td>${r.lhs.toPrecision(8)}</td><td>${rel}</td>` +
      `<td>${r.rhs.toPrecision(8)}</td><td>${r.ratio.toFixed(4)}</td><td class="${cls}">${r.satisfied ? "holds" : "violated"}</td></tr>`;
  });
  const skipped = res.skipped.map((s) => `<li>${s.bound}: ${s.reason}</li>`).join("");
  out.innerHTML =
    `<table><tr><th>bound</th><th>lhs</th><th></th><th>rhs</th><th>ratio</th><th></th></tr>${rows.join("")}</table>` +
    (skipped ? `<ul>${skipped}</ul>` : "");
}

await init();
$("m-go").onclick = runMoment;
$("c-go").onclick = runCurve;
$("d-go").onclick = runDensity;
$("u-go").onclick = runUncertainty;
for (const id of ["d", "n", "l", "z"]) {
  $(id).onchange = () => { runMoment(); runCurve(); runDensity(); runUncertainty(); };
}
runMoment();
runCurve();
runDensity();
runUncertainty();
