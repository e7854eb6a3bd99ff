// End-to-end session against a live sketch service: all seven functions,
// verbatim status strings, the vertical-lock invariant and the
// obscure-and-repaint guarantee.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SketchApp } from "../src/app.js";
import { ServiceClient } from "../src/protocol.js";
import { RecordingSurface } from "../src/surface.js";
import { TcpTransport } from "../src/tcp.js";

let server: ChildProcess;
let port = 0;

function startService(): Promise<number> {
  return new Promise((resolve, reject) => {
    server = spawn("python3", ["-m", "cgsketch.cli", "serve", "--port", "0"], {
      stdio: ["ignore", "pipe", "inherit"],
    });
    let out = "";
    server.stdout!.on("data", (chunk: Buffer) => {
      out += chunk.toString();
      const match = out.match(/LISTENING (\d+)/);
      if (match) resolve(Number(match[1]));
    });
    server.on("error", reject);
    server.on("exit", (code) => reject(new Error(`service exited early (${code})`)));
  });
}

beforeAll(async () => {
  port = await startService();
}, 20000);

afterAll(() => {
  server?.kill();
});

interface Rig {
  app: SketchApp;
  front: RecordingSurface;
  side: RecordingSurface;
  statuses: string[];
  radiusAnswers: Array<string | null>;
  client: ServiceClient;
}

async function makeRig(): Promise<Rig> {
  const front = new RecordingSurface();
  const side = new RecordingSurface();
  const statuses: string[] = [];
  const radiusAnswers: Array<string | null> = [];
  const client = new ServiceClient(new TcpTransport("127.0.0.1", port));
  const app = new SketchApp({
    client,
    front,
    side,
    status: (line) => statuses.push(line),
    promptRadius: async () => (radiusAnswers.length ? radiusAnswers.shift()! : null),
  });
  await app.connect();
  return { app, front, side, statuses, radiusAnswers, client };
}

/** Create a point through the two-click front-then-side protocol. */
async function clickPoint(rig: Rig, x: number, y: number, z: number): Promise<void> {
  const [fx, fy] = rig.app.projection("front").toPixel([x, y, 0]);
  await rig.app.pointerDown("front", fx, fy);
  const [sx, sy] = rig.app.projection("side").toPixel([0, y, z]);
  await rig.app.pointerDown("side", sx, sy);
}

function frontPixel(rig: Rig, world: [number, number, number]): [number, number] {
  return rig.app.projection("front").toPixel(world);
}

describe("end-to-end sketching session", () => {
  it("drives all seven functions against the live service", async () => {
    const rig = await makeRig();
    const { app, statuses } = rig;

    // -- point: five base points via front-then-side clicks ------------
    const layout: Array<[number, number, number]> = [
      [0, 0, 0],
      [-2, 0.5, 0],
      [2, 1, 0],
      [0, 1.5, 1],
      [1, -1, 2],
    ];
    for (const [x, y, z] of layout) await clickPoint(rig, x, y, z);

    // vertical lock: each point's disks share the vertical pixel
    for (const [x, y, z] of layout) {
      const [, fy] = app.projection("front").toPixel([x, y, z]);
      const [, sy] = app.projection("side").toPixel([x, y, z]);
      expect(Math.abs(fy - sy)).toBeLessThanOrEqual(1);
    }
    // filled disks only: the front panel additionally shows the hollow
    // provisional disk while a point entry is half done
    const frontDiskYs = rig.front.disks().filter((d) => d.fill).map((d) => d.y);
    const sideDiskYs = rig.side.disks().filter((d) => d.fill).map((d) => d.y);
    expect(frontDiskYs.length).toBeGreaterThanOrEqual(5);
    expect(sideDiskYs).toEqual(frontDiskYs);

    // -- line through points 1 and 2 (clicks on the point disks) -------
    app.setMode("line");
    await app.pointerDown("front", ...frontPixel(rig, [-2, 0.5, 0]));
    await app.pointerDown("front", ...frontPixel(rig, [2, 1, 0]));
    expect(statuses).toContain("point 1 chosen!");
    expect(statuses).toContain("point 2 chosen!");

    // -- circle through points 0, 3, 4 (panels may be mixed) -----------
    app.setMode("circle");
    await app.pointerDown("front", ...frontPixel(rig, [0, 0, 0]));
    await app.pointerDown("front", ...frontPixel(rig, [0, 1.5, 1]));
    await app.pointerDown("side", ...app.projection("side").toPixel([1, -1, 2]));
    expect(statuses).toContain("point 3 chosen!");

    // -- sphere by four fresh base points -------------------------------
    const sphere4Layout: Array<[number, number, number]> = [
      [3, 3, 0],
      [5, 3, 0],
      [4, 4, 0],
      [4, 3, 2],
    ];
    app.setMode("point");
    for (const [x, y, z] of sphere4Layout) await clickPoint(rig, x, y, z);
    app.setMode("sphere");
    for (const world of sphere4Layout) {
      await app.pointerDown("front", ...frontPixel(rig, world));
    }
    expect(statuses).toContain("point 4 chosen!");

    // -- sphere C,r around point 0, radius via the dialog ---------------
    app.setMode("sphere_cr");
    rig.radiusAnswers.push("0", "nonsense", "1"); // re-prompts, then accepts
    await app.pointerDown("front", ...frontPixel(rig, [0, 0, 0]));
    const snapshot = await rig.client.request("snapshot");
    const spheres = snapshot.changed_nodes.filter((n) => n.kind === "sphere");
    expect(spheres.length).toBe(2);
    const unit = spheres.find((s) => (s.poles ?? []).some(
      (p) => Math.abs(p[0]) < 1e-9 && Math.abs(p[1] - 1) < 1e-9));
    expect(unit).toBeDefined();
    rig.app.state.replaceAll(snapshot.changed_nodes);

    // -- S int l: pick the line, then a pole, points appear -------------
    app.setMode("s_int_l");
    // a miss first: the flow must stay on the line step
    await app.pointerDown("front", 10, 10);
    expect(statuses).toContain("Line No. -1 selected.");
    // the line through (-2,0.5)-(2,1) passes pixel (240, 210) in front
    await app.pointerDown("front", 240, 210);
    expect(statuses).toContain("Line No. 5 selected.");
    expect(statuses).toContain("And now select a sphere!");
    // a sphere miss keeps the flow on the sphere step
    await app.pointerDown("front", 10, 10);
    expect(statuses).toContain("Sphere No. -1 selected.");
    // the unit sphere's north pole projects to (240, 200) in front
    await app.pointerDown("front", 240, 200);
    expect(statuses.some((s) => s.startsWith("Sphere No. ") && !s.includes("-1"))).toBe(true);
    expect(statuses).toContain("Two points of intersection!");
    expect(statuses).toContain("Select a new line!");
    // the derived points are drawn dark blue in front, dark green in side
    const darkFront = rig.front.disks().filter((d) => d.color === "darkblue");
    const darkSide = rig.side.disks().filter((d) => d.color === "darkgreen");
    expect(darkFront.length).toBe(2);
    expect(darkSide.length).toBe(2);

    // -- move: drag point 1, the line and intersections follow ----------
    app.setMode("move");
    const start = frontPixel(rig, [-2, 0.5, 0]);
    await app.pointerDown("front", ...start);
    app.pointerMove("front", start[0], start[1] - 4);
    app.pointerMove("front", start[0], start[1] - 8);
    await app.flushMoves();
    await app.pointerUp("front", start[0], start[1] - 10); // final snapshot
    const moved = app.state.pointPosition(1)!;
    expect(moved[1]).toBeCloseTo(0.75, 9); // 10 px = 0.25 world units up
    // line node 5 follows: both endpoints of its render satisfy y(...)
    const lineRender = app.state.get(5)!;
    expect(lineRender.valid).toBe(true);
    // derived intersection points stayed valid and followed the motion
    const derived = app.state.all().filter((n) => n.kind === "derived_point");
    expect(derived.length).toBe(2);
    for (const d of derived) {
      expect(d.valid).toBe(true);
      const [px0, py0, pz0] = d.pos!;
      expect(Math.hypot(px0, py0, pz0)).toBeCloseTo(1.0, 6); // on the unit sphere
    }

    // dragging a derived point refuses with a cue and sends no command
    const before = app.movesSent;
    app.setMode("move");
    const derivedPixel = frontPixel(rig, derived[0]!.pos!);
    await app.pointerDown("front", ...derivedPixel);
    app.pointerMove("front", derivedPixel[0] + 10, derivedPixel[1]);
    await app.flushMoves();
    expect(app.movesSent).toBe(before);

    rig.client.close();
  }, 30000);

  it("repaints the full scene from a snapshot after being obscured", async () => {
    const rig = await makeRig();
    const { app } = rig;
    await clickPoint(rig, 0, 0, 0);
    await clickPoint(rig, -2, 0, 0);
    await clickPoint(rig, 2, 0.5, 0);
    app.setMode("line");
    await app.pointerDown("front", ...frontPixel(rig, [-2, 0, 0]));
    await app.pointerDown("front", ...frontPixel(rig, [2, 0.5, 0]));
    app.setMode("sphere_cr");
    rig.radiusAnswers.push("1.5");
    await app.pointerDown("front", ...frontPixel(rig, [0, 0, 0]));

    // canonical single-repaint draw sequence
    rig.front.obscure();
    rig.side.obscure();
    await app.repaint();
    const wantFront = rig.front.snapshotOps();
    const wantSide = rig.side.snapshotOps();
    expect(wantFront.length).toBeGreaterThan(3);

    rig.front.obscure(); // pixels lost again, app not notified
    rig.side.obscure();
    await app.repaint(); // snapshot-driven recovery
    expect(rig.front.ops).toEqual(wantFront);
    expect(rig.side.ops).toEqual(wantSide);
    rig.client.close();
  }, 30000);

  it("keeps sessions isolated and statuses verbatim on a fresh socket", async () => {
    const rig = await makeRig();
    const snapshot = await rig.client.request("snapshot");
    expect(snapshot.changed_nodes).toEqual([]); // nothing leaked across sessions
    rig.client.close();
  }, 30000);
});
