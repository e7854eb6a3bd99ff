// Drawing surface abstraction: a 2D canvas reduced to the three primitives
// the sketcher needs.  The browser adapter wraps CanvasRenderingContext2D;
// tests use RecordingSurface to assert exact draw sequences.

export interface DrawSurface {
  clear(): void;
  disk(x: number, y: number, radius: number, color: string, fill: boolean): void;
  polyline(points: [number, number][], color: string): void;
}

export type DrawOp =
  | { kind: "clear" }
  | { kind: "disk"; x: number; y: number; radius: number; color: string; fill: boolean }
  | { kind: "polyline"; points: [number, number][]; color: string };

export class RecordingSurface implements DrawSurface {
  ops: DrawOp[] = [];

  clear(): void {
    this.ops.push({ kind: "clear" });
  }

  disk(x: number, y: number, radius: number, color: string, fill: boolean): void {
    this.ops.push({ kind: "disk", x, y, radius, color, fill });
  }

  polyline(points: [number, number][], color: string): void {
    this.ops.push({ kind: "polyline", points: points.map((p) => [...p] as [number, number]), color });
  }

  /** Simulate the window being obscured: the pixels are gone but the app is
   * not told about it. */
  obscure(): void {
    this.ops = [];
  }

  snapshotOps(): DrawOp[] {
    return JSON.parse(JSON.stringify(this.ops)) as DrawOp[];
  }

  disks(): Extract<DrawOp, { kind: "disk" }>[] {
    return this.ops.filter((op): op is Extract<DrawOp, { kind: "disk" }> => op.kind === "disk");
  }
}

export class Canvas2DSurface implements DrawSurface {
  constructor(
    private readonly ctx: CanvasRenderingContext2D,
    private readonly width: number,
    private readonly height: number,
  ) {}

  clear(): void {
    this.ctx.fillStyle = "white";
    this.ctx.fillRect(0, 0, this.width, this.height);
    this.ctx.strokeStyle = "black";
    this.ctx.strokeRect(0.5, 0.5, this.width - 1, this.height - 1);
  }

  disk(x: number, y: number, radius: number, color: string, fill: boolean): void {
    this.ctx.beginPath();
    this.ctx.arc(x, y, radius, 0, 2 * Math.PI);
    if (fill) {
      this.ctx.fillStyle = color;
      this.ctx.fill();
    } else {
      this.ctx.strokeStyle = color;
      this.ctx.stroke();
    }
  }

  polyline(points: [number, number][], color: string): void {
    if (points.length === 0) return;
    this.ctx.beginPath();
    this.ctx.moveTo(points[0]![0], points[0]![1]);
    for (const [x, y] of points.slice(1)) this.ctx.lineTo(x, y);
    this.ctx.strokeStyle = color;
    this.ctx.stroke();
  }
}
