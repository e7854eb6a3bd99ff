// Wire protocol of the sketch service: newline-delimited JSON over a local
// socket.  The server sends one handshake line on connect, then answers each
// request with exactly one event, in order.

export type PanelName = "front" | "side";

export interface PanelSpec {
  axes: [string, string];
  scale: number;
  cx: number;
  cy: number;
  flip_y: boolean;
  width: number;
  height: number;
}

export interface Handshake {
  protocol: number;
  panels: Record<PanelName, PanelSpec>;
}

export interface NodeRender {
  id: number;
  kind: "free_point" | "derived_point" | "line" | "circle" | "sphere";
  color: string;
  side_color: string;
  valid: boolean;
  pos?: [number, number, number];
  polyline?: [number, number, number][];
  net?: [number, number, number][][];
  poles?: [number, number, number][];
}

export interface ServiceEvent {
  in_reply_to: number;
  ok: boolean;
  status: string;
  changed_nodes: NodeRender[];
  node?: number;
  nodes?: number[];
  picked?: number;
  document?: unknown;
}

/** Pluggable byte transport: TCP under node, a WebSocket bridge in
 * browsers.  Lines are complete JSON texts without the trailing newline. */
export interface Transport {
  send(line: string): void;
  onLine(handler: (line: string) => void): void;
  close(): void;
}

export class ServiceClient {
  readonly handshake: Promise<Handshake>;
  private seq = 0;
  private pending: Array<(event: ServiceEvent) => void> = [];

  constructor(private readonly transport: Transport) {
    let resolveHandshake: (h: Handshake) => void;
    this.handshake = new Promise((resolve) => {
      resolveHandshake = resolve;
    });
    let sawHandshake = false;
    transport.onLine((line) => {
      const message = JSON.parse(line);
      if (!sawHandshake) {
        sawHandshake = true;
        resolveHandshake(message as Handshake);
        return;
      }
      const waiter = this.pending.shift();
      if (waiter) waiter(message as ServiceEvent);
    });
  }

  /** Requests are answered strictly in order, so correlation is FIFO. */
  request(op: string, args: Record<string, unknown> = {}): Promise<ServiceEvent> {
    const seq = ++this.seq;
    return new Promise((resolve) => {
      this.pending.push(resolve);
      this.transport.send(JSON.stringify({ op, seq, ...args }));
    });
  }

  close(): void {
    this.transport.close();
  }
}
