"""Integer max-flow (Dinic) with residual reachability for min-cut recovery."""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    """A directed network with integer capacities.

    Arcs are stored in paired slots: arc ``i`` and its reverse ``i ^ 1``.
    """

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, a: int, b: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("negative capacity")
        idx = len(self.to)
        self.to.append(b)
        self.cap.append(capacity)
        self.head[a].append(idx)
        self.to.append(a)
        self.cap.append(0)
        self.head[b].append(idx + 1)
        return idx

    def flow_on(self, arc: int) -> int:
        """Flow currently pushed along ``arc`` (the residual of its twin)."""
        return self.cap[arc ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap, head = self.to, self.cap, self.head
        while q:
            x = q.popleft()
            for e in head[x]:
                y = to[e]
                if cap[e] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    q.append(y)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                # iterative DFS for one blocking-flow augmenting path
                path: list[int] = []
                x = s
                while x != t:
                    advanced = False
                    arcs = head[x]
                    while it[x] < len(arcs):
                        e = arcs[it[x]]
                        y = to[e]
                        if cap[e] > 0 and level[y] == level[x] + 1:
                            path.append(e)
                            x = y
                            advanced = True
                            break
                        it[x] += 1
                    if not advanced:
                        if x == s:
                            break
                        level[x] = -1
                        e = path.pop()
                        x = to[e ^ 1]
                        it[x] += 1
                if x != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                total += push

    def reachable(self, s: int) -> list[bool]:
        """Vertices reachable from ``s`` in the residual network."""
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for e in self.head[x]:
                y = self.to[e]
                if self.cap[e] > 0 and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return seen
