/**
 * Editor state machine: a frozen source polygon, a draggable target polygon,
 * a sample set, and the cached barycentric rows for those samples.
 *
 * The cache depends on the source and the samples only, so dragging target
 * vertices never talks to the service: each frame is the cached rows times
 * the current target.  Changing the source is an explicit re-setup that
 * refetches the cache.
 */

import type { CoordinateService } from "./api.js";
import type { Vec2 } from "./math.js";
import { deformAll, isConvex } from "./math.js";
import type { ShapeParams } from "./samples.js";
import { generateSamples } from "./samples.js";

export interface RenderFrame {
  source: Vec2[];
  target: [number, number][];
  samples: Vec2[];
  deformed: [number, number][];
  heatmapIndex: number | null;
  heatmapValues: number[] | null;
  banner: string | null;
}

export interface EditorEvents {
  onFrame(frame: RenderFrame): void;
  onToast(message: string): void;
}

const NOOP_EVENTS: EditorEvents = {
  onFrame: () => undefined,
  onToast: () => undefined,
};

export class Editor {
  private source: Vec2[] | null = null;
  private target: [number, number][] = [];
  private samples: Vec2[] = [];
  private betas: number[][] = [];
  private shape: ShapeParams | null = null;
  private heatmapIndex: number | null = null;
  private banner: string | null = null;
  private generation = 0;
  private controller: AbortController | null = null;

  /** Number of completed cache fills; tests watch this to prove drags never refetch. */
  betaFetchCount = 0;

  constructor(
    private readonly api: CoordinateService,
    private readonly events: EditorEvents = NOOP_EVENTS,
  ) {}

  /** Freeze a convex source polygon and reset the target onto it. */
  setup(source: readonly Vec2[]): RenderFrame {
    if (!isConvex(source)) {
      this.banner = "non-convex source polygon: coordinates are not defined, pick a convex one";
      return this.emitFrame();
    }
    this.banner = null;
    this.source = source.map(([x, y]) => [x, y] as Vec2);
    this.target = source.map(([x, y]) => [x, y]);
    this.samples = [];
    this.betas = [];
    this.shape = null;
    this.heatmapIndex = null;
    return this.emitFrame();
  }

  /** Replace the source polygon; the cache refetches for the current shape. */
  async resetup(source: readonly Vec2[]): Promise<RenderFrame> {
    const shape = this.shape;
    const frame = this.setup(source);
    if (this.source === null || shape === null) return frame;
    return this.loadShape(shape);
  }

  /**
   * Generate samples inside the source and fill the cache with one batch
   * request.  On failure the previous state is kept and a toast is raised;
   * a superseded (stale) response is discarded outright.
   */
  async loadShape(params: ShapeParams): Promise<RenderFrame> {
    if (this.source === null) {
      this.events.onToast("set up a convex source polygon first");
      return this.emitFrame();
    }
    const samples = generateSamples(this.source, params);
    if (samples.length === 0) {
      this.samples = [];
      this.betas = [];
      this.shape = params;
      return this.emitFrame();
    }
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const generation = ++this.generation;
    let coords: number[][];
    try {
      const res = await this.api.coordinates(this.source, samples, controller.signal);
      if (generation !== this.generation) return this.emitFrame();
      coords = res.coords;
      if (res.polygon_warning) {
        this.events.onToast(`service: ${res.polygon_warning}`);
      }
    } catch (err) {
      if (generation !== this.generation) return this.emitFrame();
      this.events.onToast(err instanceof Error ? err.message : String(err));
      return this.emitFrame();
    }
    this.samples = samples;
    this.betas = coords;
    this.shape = params;
    this.betaFetchCount += 1;
    return this.emitFrame();
  }

  /**
   * Move one target vertex and re-render.  Purely local: the cached rows are
   * reused untouched, so this never issues a request.
   */
  onDrag(index: number, position: Vec2): RenderFrame {
    if (
      index >= 0 &&
      index < this.target.length &&
      Number.isFinite(position[0]) &&
      Number.isFinite(position[1])
    ) {
      this.target[index] = [position[0], position[1]];
    }
    return this.emitFrame();
  }

  /** Snap the target polygon back onto the source. */
  resetTarget(): RenderFrame {
    if (this.source !== null) {
      this.target = this.source.map(([x, y]) => [x, y]);
    }
    return this.emitFrame();
  }

  setHeatmap(index: number | null): RenderFrame {
    this.heatmapIndex =
      index !== null && this.source !== null && index >= 0 && index < this.source.length
        ? index
        : null;
    return this.emitFrame();
  }

  sourceSnapshot(): Vec2[] {
    return this.source ? this.source.map(([x, y]) => [x, y] as Vec2) : [];
  }

  targetSnapshot(): [number, number][] {
    return this.target.map(([x, y]) => [x, y]);
  }

  samplesSnapshot(): Vec2[] {
    return this.samples.map(([x, y]) => [x, y] as Vec2);
  }

  betasSnapshot(): number[][] {
    return this.betas.map((row) => [...row]);
  }

  private emitFrame(): RenderFrame {
    const heat =
      this.heatmapIndex !== null && this.betas.length > 0
        ? this.betas.map((row) => row[this.heatmapIndex as number])
        : null;
    const frame: RenderFrame = {
      source: this.sourceSnapshot(),
      target: this.targetSnapshot(),
      samples: this.samplesSnapshot(),
      deformed: deformAll(this.betas, this.target),
      heatmapIndex: this.heatmapIndex,
      heatmapValues: heat,
      banner: this.banner,
    };
    this.events.onFrame(frame);
    return frame;
  }
}
