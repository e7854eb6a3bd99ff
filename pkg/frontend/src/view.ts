// Panel projection math.  The service owns the geometry; the client only
// applies the affine world-to-pixel maps delivered in the handshake.

import type { PanelName, PanelSpec } from "./protocol.js";

export type World = [number, number, number];

const AXIS_INDEX: Record<string, number> = { x: 0, y: 1, z: 2 };

export class PanelProjection {
  constructor(readonly name: PanelName, readonly spec: PanelSpec) {}

  toPixel(world: World): [number, number] {
    const h = world[AXIS_INDEX[this.spec.axes[0]]!]!;
    const v = world[AXIS_INDEX[this.spec.axes[1]]!]!;
    return [this.spec.cx + this.spec.scale * h, this.spec.cy - this.spec.scale * v];
  }

  /** Horizontal and vertical world values of a pixel (axis meaning depends
   * on the panel: front = (x, y), side = (z, y)). */
  fromPixel(px: number, py: number): { h: number; v: number } {
    return {
      h: (px - this.spec.cx) / this.spec.scale,
      v: (this.spec.cy - py) / this.spec.scale,
    };
  }
}

export interface Projections {
  front: PanelProjection;
  side: PanelProjection;
}
