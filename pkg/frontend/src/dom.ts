// Browser bootstrap: two canvases, a radio column for the seven functions
// and a status bar.  Raw TCP is not reachable from a page, so the page
// must be served next to a WebSocket-to-TCP bridge exposing the sketch
// service; the bridge simply forwards NDJSON lines in both directions.

import { SketchApp } from "./app.js";
import { MODES, type UiMode } from "./modes.js";
import { ServiceClient, type Transport } from "./protocol.js";
import { Canvas2DSurface } from "./surface.js";

class WebSocketTransport implements Transport {
  private handler: ((line: string) => void) | null = null;
  private queued: string[] = [];
  private readonly ws: WebSocket;

  constructor(url: string) {
    this.ws = new WebSocket(url);
    this.ws.onmessage = (ev) => {
      for (const line of String(ev.data).split("\n")) {
        if (!line) continue;
        if (this.handler) this.handler(line);
        else this.queued.push(line);
      }
    };
  }

  send(line: string): void {
    this.ws.send(line + "\n");
  }

  onLine(handler: (line: string) => void): void {
    this.handler = handler;
    while (this.queued.length) handler(this.queued.shift()!);
  }

  close(): void {
    this.ws.close();
  }
}

export async function boot(root: HTMLElement, serviceUrl: string): Promise<SketchApp> {
  const makeCanvas = () => {
    const canvas = document.createElement("canvas");
    canvas.width = 480;
    canvas.height = 480;
    canvas.style.border = "1px solid black";
    return canvas;
  };
  const front = makeCanvas();
  const side = makeCanvas();
  const column = document.createElement("div");
  const status = document.createElement("div");
  status.style.fontFamily = "monospace";
  root.append(front, side, column, status);

  const app = new SketchApp({
    client: new ServiceClient(new WebSocketTransport(serviceUrl)),
    front: new Canvas2DSurface(front.getContext("2d")!, 480, 480),
    side: new Canvas2DSurface(side.getContext("2d")!, 480, 480),
    status: (line) => {
      const row = document.createElement("div");
      row.textContent = line;
      status.append(row);
      status.scrollTop = status.scrollHeight;
    },
    promptRadius: async () => window.prompt("radius:"),
  });

  for (const mode of MODES) {
    const label = document.createElement("label");
    const radio = document.createElement("input");
    radio.type = "radio";
    radio.name = "function";
    radio.checked = mode === "point";
    radio.onchange = () => app.setMode(mode as UiMode);
    label.append(radio, document.createTextNode(mode));
    column.append(label, document.createElement("br"));
  }

  const wire = (canvas: HTMLCanvasElement, panel: "front" | "side") => {
    const pos = (ev: MouseEvent): [number, number] => {
      const rect = canvas.getBoundingClientRect();
      return [ev.clientX - rect.left, ev.clientY - rect.top];
    };
    canvas.onmousedown = (ev) => void app.pointerDown(panel, ...pos(ev));
    canvas.onmousemove = (ev) => {
      if (ev.buttons & 1) app.pointerMove(panel, ...pos(ev));
    };
    canvas.onmouseup = (ev) => void app.pointerUp(panel, ...pos(ev));
  };

  await app.connect();
  wire(front, "front");
  wire(side, "side");
  return app;
}
