/** Browser wiring: canvas rendering, pointer drags, and the control panel. */

import { ApiClient } from "./api.js";
import { heatColor, valueRange } from "./heatmap.js";
import type { Vec2 } from "./math.js";
import { centroid } from "./math.js";
import type { ShapeParams } from "./samples.js";
import type { RenderFrame } from "./state.js";
import { Editor } from "./state.js";

const DEFAULT_SOURCE: Vec2[] = [
  [0, 0],
  [1, 0],
  [1, 1],
  [0, 1],
];

interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function fitView(polygon: readonly Vec2[], width: number, height: number): ViewTransform {
  const xs = polygon.map((v) => v[0]);
  const ys = polygon.map((v) => v[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  // Leave room around the source so the target can be dragged outward.
  const scale = Math.min(width / (2.4 * spanX), height / (2.4 * spanY));
  const cx = (minX + maxX) / 2;
  const cy = (minY + maxY) / 2;
  return {
    scale,
    offsetX: width / 2 - cx * scale,
    offsetY: height / 2 + cy * scale,
  };
}

function toScreen(view: ViewTransform, p: Vec2): [number, number] {
  return [view.offsetX + p[0] * view.scale, view.offsetY - p[1] * view.scale];
}

function toWorld(view: ViewTransform, x: number, y: number): [number, number] {
  return [(x - view.offsetX) / view.scale, (view.offsetY - y) / view.scale];
}

function main(): void {
  const canvas = el<HTMLCanvasElement>("canvas");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2d canvas unavailable");
  const apiUrl = el<HTMLInputElement>("api-url");
  const shapeSelect = el<HTMLSelectElement>("shape");
  const heatmapSelect = el<HTMLSelectElement>("heatmap");
  const polygonInput = el<HTMLTextAreaElement>("polygon");
  const banner = el<HTMLDivElement>("banner");
  const toast = el<HTMLDivElement>("toast");
  const status = el<HTMLSpanElement>("status");

  let view = fitView(DEFAULT_SOURCE, canvas.width, canvas.height);
  let lastFrame: RenderFrame | null = null;
  let api = new ApiClient(apiUrl.value);
  let editor = new Editor(api, events());
  let toastTimer: ReturnType<typeof setTimeout> | null = null;
  let strokePoints: [number, number][] = [];
  let strokeArmed = false;
  let dragIndex = -1;

  function events() {
    return {
      onFrame(frame: RenderFrame): void {
        lastFrame = frame;
        banner.textContent = frame.banner ?? "";
        banner.style.display = frame.banner ? "block" : "none";
        draw(frame);
      },
      onToast(message: string): void {
        toast.textContent = message;
        toast.style.display = "block";
        if (toastTimer) clearTimeout(toastTimer);
        toastTimer = setTimeout(() => {
          toast.style.display = "none";
        }, 4000);
      },
    };
  }

  function drawPolygon(points: readonly Vec2[], stroke: string, fill: string | null): void {
    if (points.length === 0 || !ctx) return;
    ctx.beginPath();
    const [x0, y0] = toScreen(view, points[0]);
    ctx.moveTo(x0, y0);
    for (let i = 1; i < points.length; i++) {
      const [x, y] = toScreen(view, points[i]);
      ctx.lineTo(x, y);
    }
    ctx.closePath();
    if (fill) {
      ctx.fillStyle = fill;
      ctx.fill();
    }
    ctx.strokeStyle = stroke;
    ctx.lineWidth = 1.5;
    ctx.stroke();
  }

  function draw(frame: RenderFrame): void {
    if (!ctx) return;
    ctx.clearRect(0, 0, canvas.width, canvas.height);

    ctx.setLineDash([6, 4]);
    drawPolygon(frame.source, "#9aa0a6", null);
    ctx.setLineDash([]);
    drawPolygon(frame.target, "#1a73e8", "rgba(26, 115, 232, 0.08)");

    const range = frame.heatmapValues ? valueRange(frame.heatmapValues) : null;
    const pts = frame.deformed.length > 0 ? frame.deformed : frame.samples;
    for (let i = 0; i < pts.length; i++) {
      const [x, y] = toScreen(view, pts[i]);
      ctx.fillStyle =
        frame.heatmapValues && range
          ? heatColor(frame.heatmapValues[i], range.max)
          : "#188038";
      ctx.beginPath();
      ctx.arc(x, y, 2.2, 0, 2 * Math.PI);
      ctx.fill();
    }

    for (let i = 0; i < frame.target.length; i++) {
      const [x, y] = toScreen(view, frame.target[i]);
      ctx.fillStyle = i === dragIndex ? "#d93025" : "#1a73e8";
      ctx.beginPath();
      ctx.arc(x, y, 6, 0, 2 * Math.PI);
      ctx.fill();
      ctx.fillStyle = "#202124";
      ctx.fillText(String(i + 1), x + 8, y - 8);
    }

    for (const p of strokePoints) {
      const [x, y] = toScreen(view, p);
      ctx.fillStyle = "#f9ab00";
      ctx.fillRect(x - 1.5, y - 1.5, 3, 3);
    }
  }

  function populateHeatmapOptions(d: number): void {
    heatmapSelect.innerHTML = "";
    const none = document.createElement("option");
    none.value = "none";
    none.textContent = "no heatmap";
    heatmapSelect.appendChild(none);
    for (let i = 0; i < d; i++) {
      const opt = document.createElement("option");
      opt.value = String(i);
      opt.textContent = `coordinate ${i + 1}`;
      heatmapSelect.appendChild(opt);
    }
  }

  function currentShapeParams(): ShapeParams | null {
    const source = editor.sourceSnapshot();
    if (source.length === 0) return null;
    switch (shapeSelect.value) {
      case "grid":
        return { kind: "grid", nx: 20, ny: 20 };
      case "outline": {
        const c = centroid(source);
        const xs = source.map((v) => v[0]);
        const ys = source.map((v) => v[1]);
        const half = Math.min(
          Math.max(...xs) - c[0],
          c[0] - Math.min(...xs),
          Math.max(...ys) - c[1],
          c[1] - Math.min(...ys),
        );
        return { kind: "outline", center: c, radius: 0.7 * half, count: 128 };
      }
      default:
        return null;
    }
  }

  async function applyShape(): Promise<void> {
    strokeArmed = shapeSelect.value === "stroke";
    if (strokeArmed) {
      events().onToast("draw a stroke inside the source polygon");
      return;
    }
    const params = currentShapeParams();
    if (params) await editor.loadShape(params);
  }

  function parsePolygon(): Vec2[] | null {
    try {
      const data = JSON.parse(polygonInput.value) as unknown;
      if (
        Array.isArray(data) &&
        data.every(
          (v) =>
            Array.isArray(v) &&
            v.length === 2 &&
            v.every((c) => typeof c === "number" && Number.isFinite(c)),
        )
      ) {
        return data as Vec2[];
      }
    } catch {
      // fall through to the error toast
    }
    events().onToast("polygon must be JSON like [[0,0],[1,0],[1,1],[0,1]]");
    return null;
  }

  async function resetupFromInput(): Promise<void> {
    const polygon = parsePolygon();
    if (!polygon) return;
    view = fitView(polygon, canvas.width, canvas.height);
    populateHeatmapOptions(polygon.length);
    heatmapSelect.value = "none";
    await editor.resetup(polygon);
  }

  function pointerWorld(ev: PointerEvent): [number, number] {
    const rect = canvas.getBoundingClientRect();
    const x = Math.min(Math.max(ev.clientX - rect.left, 0), rect.width);
    const y = Math.min(Math.max(ev.clientY - rect.top, 0), rect.height);
    return toWorld(view, (x / rect.width) * canvas.width, (y / rect.height) * canvas.height);
  }

  canvas.addEventListener("pointerdown", (ev) => {
    canvas.setPointerCapture(ev.pointerId);
    if (strokeArmed) {
      strokePoints = [];
      return;
    }
    const frame = lastFrame;
    if (!frame) return;
    const rect = canvas.getBoundingClientRect();
    const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
    const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
    dragIndex = -1;
    for (let i = 0; i < frame.target.length; i++) {
      const [x, y] = toScreen(view, frame.target[i]);
      if (Math.hypot(x - px, y - py) <= 10) {
        dragIndex = i;
        break;
      }
    }
  });

  canvas.addEventListener("pointermove", (ev) => {
    if (strokeArmed && ev.buttons > 0) {
      strokePoints.push(pointerWorld(ev));
      if (lastFrame) draw(lastFrame);
      return;
    }
    if (dragIndex >= 0) {
      editor.onDrag(dragIndex, pointerWorld(ev));
    }
  });

  canvas.addEventListener("pointerup", () => {
    if (strokeArmed && strokePoints.length > 0) {
      const points = strokePoints;
      strokePoints = [];
      void editor.loadShape({ kind: "stroke", points });
      return;
    }
    dragIndex = -1;
    if (lastFrame) draw(lastFrame);
  });

  shapeSelect.addEventListener("change", () => void applyShape());
  heatmapSelect.addEventListener("change", () => {
    editor.setHeatmap(heatmapSelect.value === "none" ? null : Number(heatmapSelect.value));
  });
  el<HTMLButtonElement>("resetup").addEventListener("click", () => void resetupFromInput());
  el<HTMLButtonElement>("reset-target").addEventListener("click", () => editor.resetTarget());
  apiUrl.addEventListener("change", () => {
    api = new ApiClient(apiUrl.value);
    editor = new Editor(api, events());
    void checkHealth();
    editor.setup(DEFAULT_SOURCE);
  });

  async function checkHealth(): Promise<void> {
    try {
      const h = await api.health();
      status.textContent = `service ok (v${h.version})`;
    } catch {
      status.textContent = "service unreachable — run: wachspress serve";
    }
  }

  polygonInput.value = JSON.stringify(DEFAULT_SOURCE);
  populateHeatmapOptions(DEFAULT_SOURCE.length);
  editor.setup(DEFAULT_SOURCE);
  void checkHealth();
  void applyShape();
}

main();
