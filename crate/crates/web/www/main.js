import init, { endpointDistribution, momentCurve, losingTimeLaws } from "./pkg/lattice_walks_web.js";

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"];

const $ = (id) => document.getElementById(id);

function guarded(errorId, f) {
  return () => {
    $(errorId).textContent = "";
    try {
      f();
    } catch (e) {
      $(errorId).textContent = e.message ?? String(e);
    }
  };
}

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = "12px sans-serif";
  return ctx;
}

const PAD = { left: 50, right: 10, top: 10, bottom: 25 };

// Side-by-side bars for one or more series sharing the x positions.
function bars(canvas, series) {
  const ctx = clear(canvas);
  const len = Math.max(...series.map((s) => s.values.length));
  const max = Math.max(...series.flatMap((s) => s.values), 1e-300);
  const w = canvas.width - PAD.left - PAD.right;
  const h = canvas.height - PAD.top - PAD.bottom;
  const slot = w / Math.max(len, 1);
  const bw = Math.max(1, (slot * 0.8) / series.length);
  series.forEach((s, j) => {
    ctx.fillStyle = s.color;
    s.values.forEach((v, k) => {
      const bh = (v / max) * h;
      ctx.fillRect(PAD.left + k * slot + j * bw, PAD.top + h - bh, bw, bh);
    });
  });
  ctx.fillStyle = "#444";
  const step = Math.ceil(len / 20);
  for (let k = 0; k < len; k += step) {
    ctx.fillText(series[0].label(k), PAD.left + k * slot, canvas.height - 8);
  }
  ctx.fillText(max.toPrecision(3), 2, PAD.top + 10);
}

function lines(canvas, xs, series) {
  const ctx = clear(canvas);
  const all = series.flatMap((s) => s.values).filter(Number.isFinite);
  let lo = Math.min(...all, 0);
  let hi = Math.max(...all, 1);
  const w = canvas.width - PAD.left - PAD.right;
  const h = canvas.height - PAD.top - PAD.bottom;
  const x0 = Math.min(...xs);
  const x1 = Math.max(...xs, x0 + 1);
  const px = (x) => PAD.left + ((x - x0) / (x1 - x0)) * w;
  const py = (y) => PAD.top + h - ((y - lo) / (hi - lo)) * h;
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(PAD.left, py(0));
  ctx.lineTo(PAD.left + w, py(0));
  ctx.stroke();
  series.forEach((s) => {
    ctx.strokeStyle = s.color;
    ctx.beginPath();
    s.values.forEach((v, i) => (i ? ctx.lineTo(px(xs[i]), py(v)) : ctx.moveTo(px(xs[i]), py(v))));
    ctx.stroke();
  });
  ctx.fillStyle = "#444";
  ctx.fillText(hi.toPrecision(3), 2, PAD.top + 10);
  ctx.fillText(lo.toPrecision(3), 2, PAD.top + h);
  ctx.fillText(`n = ${x0}`, PAD.left, canvas.height - 8);
  ctx.fillText(`n = ${x1}`, PAD.left + w - 50, canvas.height - 8);
}

function runDistribution() {
  const out = JSON.parse(
    endpointDistribution($("dist-steps").value, +$("dist-a").value, +$("dist-b").value, $("dist-stat").value, 6),
  );
  const table = $("dist-table");
  table.innerHTML = "";
  if (!out.moments) {
    clear($("dist-canvas"));
    table.innerHTML = "<tr><td>no walks reach this endpoint</td></tr>";
    return;
  }
  bars($("dist-canvas"), [{ values: out.probabilities_f64, color: COLORS[0], label: (k) => String(k) }]);
  const m = out.moments;
  const rows = [
    ["walks", m.mass, ""],
    ["mean", m.mean, m.mean_decimal.slice(0, 14)],
    ["variance", m.variance, m.variance_decimal.slice(0, 14)],
    ...m.std_moments.map((s) => [`standardized ${s.order}`, s.exact, s.decimal.slice(0, 14)]),
  ];
  for (const [name, exact, dec] of rows) {
    const tr = table.insertRow();
    tr.insertCell().textContent = name;
    tr.insertCell().textContent = exact.length > 60 ? exact.slice(0, 57) + "..." : exact;
    tr.insertCell().textContent = dec;
  }
}

function runCurve() {
  const maxMoment = +$("curve-m").value;
  const out = JSON.parse(momentCurve($("curve-steps").value, +$("curve-n").value, maxMoment));
  if (out.points.length === 0) {
    clear($("curve-canvas"));
    $("curve-legend").textContent = "no reachable diagonal endpoints with a spread of losing times";
    return;
  }
  const xs = out.points.map((p) => p.n);
  const series = [
    { name: "mean / n", values: out.points.map((p) => p.mean_over_n) },
    { name: "variance / n²", values: out.points.map((p) => p.variance_over_n2) },
  ];
  for (let k = 3; k <= maxMoment; k++) {
    series.push({ name: `standardized ${k}`, values: out.points.map((p) => p.std_moments_f64[k - 3]) });
  }
  series.forEach((s, i) => (s.color = COLORS[i % COLORS.length]));
  lines($("curve-canvas"), xs, series);
  $("curve-legend").innerHTML = series.map((s) => `<span style="color:${s.color}">${s.name}</span>`).join("");
}

function runLaws() {
  const n = +$("laws-n").value;
  $("laws-n-label").textContent = n;
  const out = JSON.parse(losingTimeLaws(n));
  const norm = (xs) => {
    const total = xs.reduce((a, x) => a + Number(x), 0);
    return xs.map((x) => Number(x) / total);
  };
  bars($("laws-canvas"), [
    { values: norm(out.arcsine), color: COLORS[0], label: (k) => String(2 * k) },
    { values: norm(out.chung_feller), color: COLORS[1], label: (k) => String(2 * k) },
  ]);
}

await init();
$("dist-run").onclick = guarded("dist-error", runDistribution);
$("curve-run").onclick = guarded("curve-error", runCurve);
$("laws-n").oninput = guarded("laws-error", runLaws);
guarded("dist-error", runDistribution)();
guarded("curve-error", runCurve)();
guarded("laws-error", runLaws)();
