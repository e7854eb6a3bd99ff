"""Talk to the sketch service over its wire protocol.

Starts a server on an ephemeral port, connects a client, replays the
seven-function workflow and prints the status strings the service emits.
"""

import threading

from cgsketch.service import ServiceClient, SketchServer

server = SketchServer(("127.0.0.1", 0))
threading.Thread(target=server.serve_forever, daemon=True).start()
port = server.server_address[1]
print(f"service on 127.0.0.1:{port}")

with ServiceClient("127.0.0.1", port) as client:
    print("handshake:", client.handshake["protocol"],
          "panels:", sorted(client.handshake["panels"]))

    # point, line, circle, sphere C,r, sphere -- the creation functions
    for x, y, z in ((0, 0, 0), (-2, 0, 0), (2, 0, 0), (0, 1.5, 0), (0, 0, 2)):
        client.request("create_point", x=x, y=y, z=z)
    client.request("create_line", p1=1, p2=2)
    client.request("create_sphere_cr", center=0, radius=1.0)
    circle = client.request("create_circle", p1=1, p2=2, p3=3)
    sphere4 = client.request("create_sphere4", p1=1, p2=2, p3=3, p4=4)
    print("created nodes:", circle["node"], sphere4["node"])

    # S int l: pick the line near its projection, then a pole, intersect.
    picked = client.request("pick", target="line", panel="front",
                            px=240.0, py=240.0, then="sphere")
    print(picked["status"])
    pole = client.request("pick", target="sphere", panel="front",
                          px=240.0, py=200.0)    # north pole of the unit sphere
    print(pole["status"])
    hit = client.request("intersect", sphere=6, line=5)
    print(hit["status"])

    # move: drag a line endpoint; every dependent re-renders.
    moved = client.request("move_point", id=1, x=-2.0, y=0.25, z=0.0)
    print("changed nodes after move:",
          [r["id"] for r in moved["changed_nodes"]])

    # snapshot: a stateless client can repaint everything at any time.
    snapshot = client.request("snapshot")
    print("snapshot renders:", [r["id"] for r in snapshot["changed_nodes"]])

server.shutdown()
server.server_close()
