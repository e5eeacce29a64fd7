"""Unit-capacity max flow on the vertex-split network of an undirected graph.

Vertex ``v`` becomes ``v_in = 2v`` and ``v_out = 2v + 1`` joined by an arc of
capacity one, so flow paths are internally vertex-disjoint. Each undirected
edge ``{u, v}`` becomes arcs ``u_out -> v_in`` and ``v_out -> u_in`` of
capacity one.
"""

from collections import deque


class VertexSplitFlow:
    def __init__(self, graph, sources, sinks, *, sink_capacity=None):
        """Flow from any vertex in ``sources`` to any vertex in ``sinks``.

        Sources have unlimited vertex capacity; sinks too unless
        ``sink_capacity`` is given. Flow never passes through a sink, so with
        ``sink_capacity=1`` the paths form a fan onto distinct sinks.
        """
        n = graph.n
        self.n = n
        size = 2 * n + 2
        self.S = 2 * n
        self.T = 2 * n + 1
        self.head = [[] for _ in range(size)]
        self.to = []
        self.cap = []
        big = n + 1
        sources = set(sources)
        sinks = set(sinks)
        for v in range(n):
            if v in sources:
                c = big
            elif v in sinks:
                c = big if sink_capacity is None else sink_capacity
            else:
                c = 1
            self._arc(2 * v, 2 * v + 1, c)
        for v in sources:
            self._arc(self.S, 2 * v, big)
        for v in sinks:
            self._arc(2 * v + 1, self.T, big)
        for u in range(n):
            if u in sinks:
                continue
            for w in graph.neighbors(u):
                if w in sources:
                    continue
                self._arc(2 * u + 1, 2 * w, 1)

    def _arc(self, a, b, c):
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def run(self, limit=None):
        """Augment along shortest residual paths; returns the flow value."""
        flow = 0
        S, T = self.S, self.T
        while limit is None or flow < limit:
            prev = [-1] * len(self.head)
            prev[S] = -2
            q = deque([S])
            while q and prev[T] == -1:
                a = q.popleft()
                for e in self.head[a]:
                    b = self.to[e]
                    if self.cap[e] > 0 and prev[b] == -1:
                        prev[b] = e
                        q.append(b)
            if prev[T] == -1:
                break
            b = T
            while b != S:
                e = prev[b]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                b = self.to[e ^ 1]
            flow += 1
        return flow

    def paths(self):
        """Decompose the current flow into vertex sequences, source first."""
        used = {}
        for a in range(len(self.head)):
            for e in self.head[a]:
                if e % 2 == 0 and self.cap[e ^ 1] > 0:
                    used.setdefault(a, []).append(e)
        out = []
        for e0 in list(used.get(self.S, [])):
            for _ in range(self.cap[e0 ^ 1]):
                seq = []
                a = self.S
                while a != self.T:
                    e = next(e for e in used[a] if self.cap[e ^ 1] > 0)
                    self.cap[e ^ 1] -= 1
                    self.cap[e] += 1
                    a = self.to[e]
                    if a < 2 * self.n and a % 2 == 0:
                        v = a // 2
                        if not seq or seq[-1] != v:
                            seq.append(v)
                out.append(seq)
        return out
