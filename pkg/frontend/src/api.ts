/** Typed client for the local coordinate/deformation JSON service. */

import type { Vec2 } from "./math.js";
import { allFinite } from "./math.js";

export interface CoordinatesResponse {
  coords: number[][];
  warnings: (string | null)[];
  polygon_warning: string | null;
}

export interface DeformResponse {
  points: [number, number][];
  warnings: (string | null)[];
  polygon_warning: string | null;
}

export interface HealthResponse {
  status: string;
  version: string;
}

/** What the editor needs from the backend; lets tests substitute a fake. */
export interface CoordinateService {
  coordinates(
    polygon: readonly Vec2[],
    points: readonly Vec2[],
    signal?: AbortSignal,
  ): Promise<CoordinatesResponse>;
  deform(
    source: readonly Vec2[],
    target: readonly Vec2[],
    points: readonly Vec2[],
    signal?: AbortSignal,
  ): Promise<DeformResponse>;
}

export class ServiceError extends Error {
  constructor(
    message: string,
    readonly status: number | null = null,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

function requireFinite(label: string, points: readonly Vec2[]): void {
  if (!allFinite(points)) {
    throw new ServiceError(`refusing to send non-finite numbers in ${label}`);
  }
}

export class ApiClient implements CoordinateService {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = (input, init) => fetch(input, init),
  ) {}

  async health(): Promise<HealthResponse> {
    const res = await this.fetchImpl(`${this.baseUrl}/v1/health`);
    return (await res.json()) as HealthResponse;
  }

  async coordinates(
    polygon: readonly Vec2[],
    points: readonly Vec2[],
    signal?: AbortSignal,
  ): Promise<CoordinatesResponse> {
    requireFinite("polygon", polygon);
    requireFinite("points", points);
    return this.post<CoordinatesResponse>("/v1/coordinates", { polygon, points }, signal);
  }

  async deform(
    source: readonly Vec2[],
    target: readonly Vec2[],
    points: readonly Vec2[],
    signal?: AbortSignal,
  ): Promise<DeformResponse> {
    requireFinite("source", source);
    requireFinite("target", target);
    requireFinite("points", points);
    return this.post<DeformResponse>("/v1/deform", { source, target, points }, signal);
  }

  private async post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const res = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    let data: unknown = null;
    try {
      data = await res.json();
    } catch {
      if (res.ok) throw new ServiceError("service returned a non-JSON body", res.status);
    }
    if (!res.ok) {
      const detail =
        data && typeof data === "object" && "error" in data
          ? String((data as { error: unknown }).error)
          : `HTTP ${res.status}`;
      throw new ServiceError(detail, res.status);
    }
    return data as T;
  }
}
