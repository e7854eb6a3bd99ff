// Node TCP transport for the NDJSON protocol (tests and desktop use).
// Browsers substitute a WebSocket bridge implementing the same interface.

import * as net from "node:net";

import type { Transport } from "./protocol.js";

export class TcpTransport implements Transport {
  private handler: ((line: string) => void) | null = null;
  private buffer = "";
  private readonly socket: net.Socket;
  private readonly queued: string[] = [];

  constructor(host: string, port: number) {
    this.socket = net.createConnection({ host, port });
    this.socket.setEncoding("utf-8");
    this.socket.on("data", (chunk: string) => {
      this.buffer += chunk;
      for (;;) {
        const nl = this.buffer.indexOf("\n");
        if (nl < 0) break;
        const line = this.buffer.slice(0, nl);
        this.buffer = this.buffer.slice(nl + 1);
        if (this.handler) this.handler(line);
        else this.queued.push(line);
      }
    });
  }

  send(line: string): void {
    this.socket.write(line + "\n");
  }

  onLine(handler: (line: string) => void): void {
    this.handler = handler;
    while (this.queued.length) handler(this.queued.shift()!);
  }

  close(): void {
    this.socket.end();
    this.socket.destroy();
  }
}
