// The dual-panel sketcher: front and right-side view canvases plus a
// function column, wired to the sketch service.  All seven functions --
// point, line, circle, sphere C,r, sphere, move, S int l -- run through
// the wire protocol; the client holds no authoritative geometry and can
// repaint from a snapshot at any moment.

import { SELECTION_TARGETS, type UiMode } from "./modes.js";
import type { PanelName, ServiceClient, ServiceEvent } from "./protocol.js";
import type { DrawSurface } from "./surface.js";
import { ViewState } from "./state.js";
import { PanelProjection, type Projections } from "./view.js";

export interface AppOptions {
  client: ServiceClient;
  front: DrawSurface;
  side: DrawSurface;
  /** Status sink; every server status line surfaces here verbatim. */
  status: (line: string) => void;
  /** Modal radius dialog for the sphere C,r flow; null means cancelled. */
  promptRadius: () => Promise<string | null>;
}

interface DragState {
  id: number;
  panel: PanelName;
  base: [number, number, number];
  pending: [number, number, number] | null;
  inFlight: boolean;
  pump: Promise<void>;
}

const PROVISIONAL_RADIUS = 4;

export class SketchApp {
  readonly state = new ViewState();
  mode: UiMode = "point";
  movesSent = 0;

  private projections!: Projections;
  private pendingFrontClick: { x: number; y: number } | null = null;
  private selection: number[] = [];
  private intersectStep: "line" | "sphere" = "line";
  private intersectLine = -1;
  private drag: DragState | null = null;

  private readonly client: ServiceClient;
  private readonly surfaces: Record<PanelName, DrawSurface>;
  private readonly statusSink: (line: string) => void;
  private readonly promptRadius: () => Promise<string | null>;

  constructor(options: AppOptions) {
    this.client = options.client;
    this.surfaces = { front: options.front, side: options.side };
    this.statusSink = options.status;
    this.promptRadius = options.promptRadius;
  }

  async connect(): Promise<void> {
    const handshake = await this.client.handshake;
    if (handshake.protocol !== 1) {
      throw new Error(`unsupported protocol ${handshake.protocol}`);
    }
    this.projections = {
      front: new PanelProjection("front", handshake.panels.front),
      side: new PanelProjection("side", handshake.panels.side),
    };
    await this.repaint();
  }

  projection(panel: PanelName): PanelProjection {
    return this.projections[panel];
  }

  setMode(mode: UiMode): void {
    this.mode = mode;
    // radio semantics: any in-progress flow is abandoned, provisional
    // marks disappear on the next paint
    this.pendingFrontClick = null;
    this.selection = [];
    this.intersectStep = "line";
    this.intersectLine = -1;
    this.drag = null;
    this.paintFromCache();
  }

  // ------------------------------------------------------------------
  // painting
  // ------------------------------------------------------------------
  paintFromCache(): void {
    this.state.paintPanel(this.surfaces.front, this.projections.front, "front");
    this.state.paintPanel(this.surfaces.side, this.projections.side, "side");
    if (this.pendingFrontClick) {
      const [px, py] = this.projections.front.toPixel([
        this.pendingFrontClick.x,
        this.pendingFrontClick.y,
        0,
      ]);
      this.surfaces.front.disk(px, py, PROVISIONAL_RADIUS, "blue", false);
    }
  }

  /** Snapshot-driven full repaint; recovers from any lost display. */
  async repaint(): Promise<void> {
    const snapshot = await this.client.request("snapshot");
    this.state.replaceAll(snapshot.changed_nodes);
    this.paintFromCache();
  }

  private absorb(event: ServiceEvent): ServiceEvent {
    if (event.status) {
      for (const line of event.status.split("\n")) this.statusSink(line);
    }
    if (event.changed_nodes.length) {
      this.state.applyChanged(event.changed_nodes);
    }
    this.paintFromCache();
    return event;
  }

  // ------------------------------------------------------------------
  // pointer input
  // ------------------------------------------------------------------
  async pointerDown(panel: PanelName, px: number, py: number): Promise<void> {
    switch (this.mode) {
      case "point":
        return this.pointEntry(panel, px, py);
      case "line":
      case "circle":
      case "sphere":
        return this.selectPoint(panel, px, py);
      case "sphere_cr":
        return this.sphereCr(panel, px, py);
      case "move":
        return this.beginDrag(panel, px, py);
      case "s_int_l":
        return this.intersectClick(panel, px, py);
    }
  }

  pointerMove(panel: PanelName, px: number, py: number): void {
    if (this.mode !== "move" || !this.drag || this.drag.panel !== panel) return;
    this.queueMove(panel, px, py);
  }

  async pointerUp(panel: PanelName, px: number, py: number): Promise<void> {
    if (this.mode !== "move" || !this.drag) return;
    if (this.drag.panel === panel) this.queueMove(panel, px, py);
    const drag = this.drag;
    this.drag = null;
    await drag.pump;
    // final authoritative snapshot after the drag settles
    await this.repaint();
  }

  /** Wait until all coalesced drag commands have been answered. */
  async flushMoves(): Promise<void> {
    if (this.drag) await this.drag.pump;
  }

  // ------------------------------------------------------------------
  // point entry: front click first, then side click completes (x, y, z)
  // ------------------------------------------------------------------
  private async pointEntry(panel: PanelName, px: number, py: number): Promise<void> {
    if (panel === "front") {
      if (this.pendingFrontClick) return; // front stays deactivated
      const { h, v } = this.projections.front.fromPixel(px, py);
      this.pendingFrontClick = { x: h, y: v };
      this.paintFromCache(); // provisional blue disk
      return;
    }
    if (!this.pendingFrontClick) return; // flow starts on the front panel
    const { h: z } = this.projections.side.fromPixel(px, py);
    const { x, y } = this.pendingFrontClick; // vertical carried from the front click
    this.pendingFrontClick = null;
    this.absorb(await this.client.request("create_point", { x, y, z }));
  }

  // ------------------------------------------------------------------
  // n-point selection flows (line / circle / sphere)
  // ------------------------------------------------------------------
  private async selectPoint(panel: PanelName, px: number, py: number): Promise<void> {
    const target = SELECTION_TARGETS[this.mode]!;
    const event = this.absorb(
      await this.client.request("pick", {
        target: "point",
        panel,
        px,
        py,
        ordinal: this.selection.length + 1,
      }),
    );
    if (event.picked === undefined || event.picked < 0) return; // no progress
    this.selection.push(event.picked);
    if (this.selection.length < target) return;
    const ids = this.selection;
    this.selection = [];
    if (this.mode === "line") {
      this.absorb(await this.client.request("create_line", { p1: ids[0], p2: ids[1] }));
    } else if (this.mode === "circle") {
      this.absorb(
        await this.client.request("create_circle", { p1: ids[0], p2: ids[1], p3: ids[2] }),
      );
    } else {
      this.absorb(
        await this.client.request("create_sphere4", {
          p1: ids[0],
          p2: ids[1],
          p3: ids[2],
          p4: ids[3],
        }),
      );
    }
  }

  // ------------------------------------------------------------------
  // sphere C,r: center point click, then the radius dialog
  // ------------------------------------------------------------------
  private async sphereCr(panel: PanelName, px: number, py: number): Promise<void> {
    const event = this.absorb(
      await this.client.request("pick", { target: "point", panel, px, py }),
    );
    if (event.picked === undefined || event.picked < 0) return;
    const center = event.picked;
    for (;;) {
      const answer = await this.promptRadius();
      if (answer === null) return; // cancelled: no command
      const radius = Number(answer);
      if (!Number.isFinite(radius) || radius <= 0) continue; // re-prompt
      this.absorb(await this.client.request("create_sphere_cr", { center, radius }));
      return;
    }
  }

  // ------------------------------------------------------------------
  // move: drag a free point, dependents follow; derived points refuse
  // ------------------------------------------------------------------
  private async beginDrag(panel: PanelName, px: number, py: number): Promise<void> {
    const event = this.absorb(
      await this.client.request("pick", { target: "point", panel, px, py }),
    );
    if (event.picked === undefined || event.picked < 0) return;
    const id = event.picked;
    const base = this.state.pointPosition(id);
    if (base === null) return;
    if (this.state.isDerivedPoint(id)) {
      // visual refusal cue: derived points follow their parents
      const [qx, qy] = this.projection(panel).toPixel(base);
      this.surfaces[panel].disk(qx, qy, PROVISIONAL_RADIUS + 2, "gray", false);
      return;
    }
    this.drag = { id, panel, base, pending: null, inFlight: false, pump: Promise.resolve() };
  }

  private queueMove(panel: PanelName, px: number, py: number): void {
    const drag = this.drag;
    if (!drag) return;
    const { h, v } = this.projection(panel).fromPixel(px, py);
    // the panel fixes two coordinates, the third keeps its dragged value
    const world: [number, number, number] =
      panel === "front" ? [h, v, drag.base[2]] : [drag.base[0], v, h];
    drag.pending = world;
    if (!drag.inFlight) {
      drag.inFlight = true;
      drag.pump = this.pumpMoves(drag);
    }
  }

  /** At most one move_point in flight; pointer events coalesce onto the
   * latest position while a command is outstanding. */
  private async pumpMoves(drag: DragState): Promise<void> {
    while (drag.pending) {
      const [x, y, z] = drag.pending;
      drag.pending = null;
      this.movesSent += 1;
      this.absorb(await this.client.request("move_point", { id: drag.id, x, y, z }));
    }
    drag.inFlight = false;
  }

  // ------------------------------------------------------------------
  // S int l: pick a line, then a sphere pole, then intersect
  // ------------------------------------------------------------------
  private async intersectClick(panel: PanelName, px: number, py: number): Promise<void> {
    if (this.intersectStep === "line") {
      const event = this.absorb(
        await this.client.request("pick", {
          target: "line",
          panel,
          px,
          py,
          then: "sphere",
        }),
      );
      if (event.picked !== undefined && event.picked >= 0) {
        this.intersectLine = event.picked;
        this.intersectStep = "sphere";
      }
      return; // on a miss the flow stays on this step
    }
    const event = this.absorb(
      await this.client.request("pick", { target: "sphere", panel, px, py }),
    );
    if (event.picked === undefined || event.picked < 0) return;
    this.absorb(
      await this.client.request("intersect", {
        sphere: event.picked,
        line: this.intersectLine,
      }),
    );
    this.intersectStep = "line";
    this.intersectLine = -1;
  }
}
