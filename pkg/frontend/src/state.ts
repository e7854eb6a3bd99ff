// Client-side view state: a cache of node renders sufficient to repaint the
// whole scene at any time.  The client never owns authoritative geometry --
// everything here arrived from the service.

import type { NodeRender, PanelName } from "./protocol.js";
import type { DrawSurface } from "./surface.js";
import type { PanelProjection } from "./view.js";

const POINT_RADIUS = 3;
const POLE_RADIUS = 2;

export class ViewState {
  private cache = new Map<number, NodeRender>();

  applyChanged(renders: NodeRender[]): void {
    for (const render of renders) this.cache.set(render.id, render);
  }

  replaceAll(renders: NodeRender[]): void {
    this.cache.clear();
    this.applyChanged(renders);
  }

  get(id: number): NodeRender | undefined {
    return this.cache.get(id);
  }

  all(): NodeRender[] {
    return [...this.cache.values()].sort((a, b) => a.id - b.id);
  }

  pointPosition(id: number): [number, number, number] | null {
    const render = this.cache.get(id);
    return render?.pos ? [...render.pos] : null;
  }

  isDerivedPoint(id: number): boolean {
    return this.cache.get(id)?.kind === "derived_point";
  }

  paintPanel(surface: DrawSurface, projection: PanelProjection, panel: PanelName): void {
    surface.clear();
    for (const render of this.all()) {
      if (!render.valid) continue;
      const color = panel === "side" ? render.side_color : render.color;
      if (render.pos) {
        const [x, y] = projection.toPixel(render.pos);
        surface.disk(x, y, POINT_RADIUS, color, true);
      } else if (render.polyline) {
        surface.polyline(render.polyline.map((p) => projection.toPixel(p)), color);
      } else if (render.net) {
        for (const line of render.net) {
          surface.polyline(line.map((p) => projection.toPixel(p)), color);
        }
        for (const pole of render.poles ?? []) {
          const [x, y] = projection.toPixel(pole);
          surface.disk(x, y, POLE_RADIUS, color, true);
        }
      }
    }
  }
}
