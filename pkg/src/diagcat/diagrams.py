"""Diagram construction, validation, enumeration and structural predicates.

Vertices are pairs (row, index) with row 0 = bottom, row 1 = top and the
index 1-based within its row. Only skeletal objects are representable:
the rows are [n] and [m] (with a color split for the walled variant).
All diagram values are immutable and stored in canonical form, so that
equality, hashing and enumeration order are purely structural.
"""

from itertools import combinations, permutations

from .errors import (
    ColorViolation,
    NotAMatching,
    NotAPartition,
    NotInjective,
    ParityViolation,
    UnsupportedVariant,
    VariantMismatch,
)

BOTTOM, TOP = 0, 1

BRAUER_FAMILY = ("brauer", "signed", "walled", "temperley_lieb")
PARTITION_FAMILY = ("partition", "degenerate")
VARIANTS = BRAUER_FAMILY + PARTITION_FAMILY + ("fisharp",)


def vertex_text(v):
    row, i = v
    return ("b" if row == BOTTOM else "t") + str(i)


def _canon_edge(e):
    a, b = e
    return (a, b) if a <= b else (b, a)


def _check_vertices(vertices, n, m, exc=NotAMatching):
    for row, i in vertices:
        size = n if row == BOTTOM else m
        if not 1 <= i <= size:
            raise exc(f"vertex {vertex_text((row, i))} out of range")


class BrauerDiagram:
    """Perfect matching on the disjoint union of a bottom and a top row."""

    variant = "brauer"
    __slots__ = ("n", "m", "edges", "_hash")

    def __init__(self, n, m, edges):
        edges = tuple(sorted(_canon_edge(tuple(e)) for e in edges))
        _check_vertices((v for e in edges for v in e), n, m)
        seen = set()
        for e in edges:
            for v in e:
                if v in seen:
                    raise NotAMatching(f"vertex {vertex_text(v)} used twice")
                seen.add(v)
        if (n + m) % 2 != 0:
            detail = ""
            if len(seen) != n + m:
                detail = f" ({vertex_text(_first_missing(seen, n, m))} unmatched)"
            raise ParityViolation(f"no matching on {n}+{m} vertices{detail}")
        if len(seen) != n + m:
            missing = _first_missing(seen, n, m)
            raise NotAMatching(f"vertex {vertex_text(missing)} unmatched")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):
        raise AttributeError("diagrams are immutable")

    @classmethod
    def _raw(cls, n, m, edges):
        # trusted constructor: edges must already be canonical pairs
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        return self

    @property
    def bottom(self):
        return self.n

    @property
    def top(self):
        return self.m

    def sort_key(self):
        return (self.n, self.m, self.edges)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.n == other.n
            and self.m == other.m
            and self.edges == other.edges
        )

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash((type(self).__name__, self.n, self.m, self.edges))
            object.__setattr__(self, "_hash", h)
            return h

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def edge_kinds(self):
        """(vertical, bottom horizontal, top horizontal) edge tuples."""
        vert, bot, top = [], [], []
        for a, b in self.edges:
            if a[0] == b[0]:
                (bot if a[0] == BOTTOM else top).append((a, b))
            else:
                vert.append((a, b))
        return vert, bot, top

    def to_text(self):
        body = "".join(
            f"({vertex_text(a)} {vertex_text(b)})" for a, b in self.edges
        )
        return f"{self.n}->{self.m}:{body}"

    def to_json(self):
        return {
            "variant": self.variant,
            "bottom": self.n,
            "top": self.m,
            "edges": [[vertex_text(a), vertex_text(b)] for a, b in self.edges],
        }

    def __repr__(self):
        return f"<{type(self).__name__} {self.to_text()}>"


def _first_missing(seen, n, m):
    for i in range(1, n + 1):
        if (BOTTOM, i) not in seen:
            return (BOTTOM, i)
    for i in range(1, m + 1):
        if (TOP, i) not in seen:
            return (TOP, i)
    raise AssertionError


def iota_key(v, n, m):
    """Position in the total order b1 < ... < bn < tm < ... < t1."""
    row, i = v
    return i if row == BOTTOM else n + m + 1 - i


class SignedBrauerDiagram(BrauerDiagram):
    """Brauer diagram whose horizontal edges carry orientations.

    `arrows` stores each horizontal edge as a (tail, head) pair. Values
    with any orientation are representable; `canonicalize` rewrites to
    the reference orientation (tail = smaller endpoint in the iota
    order) and reports the sign picked up.
    """

    variant = "signed"
    __slots__ = ("arrows",)

    def __init__(self, n, m, edges, arrows=None):
        super().__init__(n, m, edges)
        _, bot, top = self.edge_kinds()
        horizontal = {frozenset(e) for e in bot + top}
        if arrows is None:
            arrows = [canonical_arrow(e, n, m) for e in bot + top]
        arrows = tuple(sorted(tuple(a) for a in arrows))
        if {frozenset(a) for a in arrows} != horizontal or len(arrows) != len(
            horizontal
        ):
            raise NotAMatching("arrows must orient exactly the horizontal edges")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def _raw_signed(cls, n, m, edges, arrows):
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "arrows", tuple(sorted(arrows)))
        return self

    def sort_key(self):
        return (self.n, self.m, self.edges, self.arrows)

    def __eq__(self, other):
        return super().__eq__(other) and self.arrows == other.arrows

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash(("signed", self.n, self.m, self.edges, self.arrows))
            object.__setattr__(self, "_hash", h)
            return h

    def canonicalize(self):
        """(sign, diagram with reference orientations); sign = (-1)^flips."""
        flips = 0
        fixed = []
        for tail, head in self.arrows:
            canon = canonical_arrow((tail, head), self.n, self.m)
            if (tail, head) != canon:
                flips += 1
            fixed.append(canon)
        if flips == 0:
            return 1, self
        sign = -1 if flips % 2 else 1
        return sign, SignedBrauerDiagram._raw_signed(
            self.n, self.m, self.edges, fixed
        )

    def is_canonical(self):
        return all(
            a == canonical_arrow(a, self.n, self.m) for a in self.arrows
        )

    def to_text(self):
        oriented = {frozenset(a): a for a in self.arrows}
        parts = []
        for a, b in self.edges:
            arrow = oriented.get(frozenset((a, b)))
            if arrow is None:
                parts.append(f"({vertex_text(a)} {vertex_text(b)})")
            else:
                parts.append(f"({vertex_text(arrow[0])}>{vertex_text(arrow[1])})")
        return f"{self.n}->{self.m}:{''.join(parts)}"

    def to_json(self):
        oriented = {frozenset(a): a for a in self.arrows}
        edges = []
        for a, b in self.edges:
            arrow = oriented.get(frozenset((a, b)))
            pair = (a, b) if arrow is None else arrow
            edges.append([vertex_text(pair[0]), vertex_text(pair[1])])
        return {
            "variant": self.variant,
            "bottom": self.n,
            "top": self.m,
            "edges": edges,
        }


def canonical_arrow(edge, n, m):
    a, b = edge
    if iota_key(a, n, m) <= iota_key(b, n, m):
        return (a, b)
    return (b, a)


class WalledBrauerDiagram(BrauerDiagram):
    """Brauer diagram on 2-colored rows.

    Rows are pairs (count of color 1, count of color 2); within a row,
    all color-1 vertices come before all color-2 vertices. Vertical
    edges join equal colors, horizontal edges join different colors.
    """

    variant = "walled"
    __slots__ = ("bottom_colors", "top_colors")

    def __init__(self, bottom, top, edges):
        n1, n2 = bottom
        m1, m2 = top
        super().__init__(n1 + n2, m1 + m2, edges)
        object.__setattr__(self, "bottom_colors", (n1, n2))
        object.__setattr__(self, "top_colors", (m1, m2))
        for a, b in self.edges:
            same_row = a[0] == b[0]
            same_color = self.color(a) == self.color(b)
            if same_row and same_color:
                raise ColorViolation(
                    f"horizontal edge {vertex_text(a)} {vertex_text(b)} joins equal colors"
                )
            if not same_row and not same_color:
                raise ColorViolation(
                    f"vertical edge {vertex_text(a)} {vertex_text(b)} joins different colors"
                )

    @classmethod
    def _raw_walled(cls, bottom, top, edges):
        self = object.__new__(cls)
        object.__setattr__(self, "n", bottom[0] + bottom[1])
        object.__setattr__(self, "m", top[0] + top[1])
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "bottom_colors", tuple(bottom))
        object.__setattr__(self, "top_colors", tuple(top))
        return self

    @property
    def bottom(self):
        return self.bottom_colors

    @property
    def top(self):
        return self.top_colors

    def color(self, v):
        row, i = v
        split = self.bottom_colors[0] if row == BOTTOM else self.top_colors[0]
        return 1 if i <= split else 2

    def sort_key(self):
        return (self.bottom_colors, self.top_colors, self.edges)

    def __eq__(self, other):
        return (
            type(other) is WalledBrauerDiagram
            and self.bottom_colors == other.bottom_colors
            and self.top_colors == other.top_colors
            and self.edges == other.edges
        )

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash(("walled", self.bottom_colors, self.top_colors, self.edges))
            object.__setattr__(self, "_hash", h)
            return h

    def to_text(self):
        n1, n2 = self.bottom_colors
        m1, m2 = self.top_colors
        body = "".join(
            f"({vertex_text(a)} {vertex_text(b)})" for a, b in self.edges
        )
        return f"{n1}+{n2}->{m1}+{m2}:{body}"

    def to_json(self):
        return {
            "variant": self.variant,
            "bottom": list(self.bottom_colors),
            "top": list(self.top_colors),
            "edges": [[vertex_text(a), vertex_text(b)] for a, b in self.edges],
        }


class PartitionDiagram:
    """Set partition of the bottom and top rows into nonempty blocks."""

    variant = "partition"
    __slots__ = ("n", "m", "blocks", "_hash")

    def __init__(self, n, m, blocks):
        blocks = tuple(
            sorted(tuple(sorted(set(map(tuple, b)))) for b in blocks)
        )
        if any(not b for b in blocks):
            raise NotAPartition("empty block")
        _check_vertices((v for b in blocks for v in b), n, m, exc=NotAPartition)
        seen = set()
        for b in blocks:
            for v in b:
                if v in seen:
                    raise NotAPartition(
                        f"vertex {vertex_text(v)} in two blocks"
                    )
                seen.add(v)
        if len(seen) != n + m:
            raise NotAPartition("blocks do not cover all vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("diagrams are immutable")

    @classmethod
    def _raw(cls, n, m, blocks):
        # trusted constructor: blocks must be disjoint and covering
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(
            self, "blocks", tuple(sorted(tuple(sorted(b)) for b in blocks))
        )
        return self

    @property
    def bottom(self):
        return self.n

    @property
    def top(self):
        return self.m

    def sort_key(self):
        return (self.n, self.m, self.blocks)

    def __eq__(self, other):
        return (
            type(other) is PartitionDiagram
            and self.n == other.n
            and self.m == other.m
            and self.blocks == other.blocks
        )

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            h = hash(("partition", self.n, self.m, self.blocks))
            object.__setattr__(self, "_hash", h)
            return h

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_text(self):
        body = "".join(
            "{" + " ".join(vertex_text(v) for v in b) + "}" for b in self.blocks
        )
        return f"{self.n}->{self.m}:{body}"

    def to_json(self):
        return {
            "variant": self.variant,
            "bottom": self.n,
            "top": self.m,
            "blocks": [[vertex_text(v) for v in b] for b in self.blocks],
        }

    def __repr__(self):
        return f"<PartitionDiagram {self.to_text()}>"


class PartialInjection:
    """Injection from a subset of the bottom row to a subset of the top."""

    variant = "fisharp"
    __slots__ = ("n", "m", "pairs")

    def __init__(self, n, m, pairs, allow_non_injective=False):
        pairs = tuple(sorted((int(a), int(b)) for a, b in pairs))
        for a, b in pairs:
            if not (1 <= a <= n and 1 <= b <= m):
                raise NotInjective(f"pair b{a}->t{b} out of range")
        dom = [a for a, _ in pairs]
        img = [b for _, b in pairs]
        if len(set(dom)) != len(dom):
            raise NotInjective("repeated source vertex")
        if not allow_non_injective and len(set(img)) != len(img):
            raise NotInjective("repeated target vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("diagrams are immutable")

    @property
    def bottom(self):
        return self.n

    @property
    def top(self):
        return self.m

    def sort_key(self):
        return (self.n, self.m, self.pairs)

    def __eq__(self, other):
        return (
            type(other) is PartialInjection
            and self.n == other.n
            and self.m == other.m
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash(("fisharp", self.n, self.m, self.pairs))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def as_dict(self):
        return dict(self.pairs)

    def to_text(self):
        body = ", ".join(f"b{a}->t{b}" for a, b in self.pairs)
        return f"{self.n}->{self.m}:[{body}]"

    def to_json(self):
        return {
            "variant": self.variant,
            "bottom": self.n,
            "top": self.m,
            "pairs": [[f"b{a}", f"t{b}"] for a, b in self.pairs],
        }

    def __repr__(self):
        return f"<PartialInjection {self.to_text()}>"


def make_diagram(variant, bottom, top, data):
    """Validate and build the canonical diagram of the given variant."""
    if variant == "brauer":
        return BrauerDiagram(bottom, top, data)
    if variant == "temperley_lieb":
        d = BrauerDiagram(bottom, top, data)
        if not is_planar(d):
            raise NotAMatching("diagram is not planar")
        return d
    if variant == "signed":
        edges = [tuple(e) for e in data]
        n, m = bottom, top
        arrows = [e for e in edges if e[0][0] == e[1][0]]
        return SignedBrauerDiagram(n, m, edges, arrows)
    if variant == "walled":
        return WalledBrauerDiagram(bottom, top, data)
    if variant in PARTITION_FAMILY:
        return PartitionDiagram(bottom, top, data)
    if variant == "fisharp":
        return PartialInjection(bottom, top, data)
    raise UnsupportedVariant(f"unknown variant {variant!r}")


def is_upwards(d):
    """No structure below: the diagram lives in the upwards subcategory."""
    if isinstance(d, PartialInjection):
        return len(d.pairs) == d.n
    if isinstance(d, PartitionDiagram):
        for b in d.blocks:
            n_bot = sum(1 for v in b if v[0] == BOTTOM)
            if n_bot > 1 or n_bot == len(b):
                return False
        return True
    _, bot, _ = d.edge_kinds()
    return not bot


def is_downwards(d):
    if isinstance(d, PartialInjection):
        return len(d.pairs) == d.m
    if isinstance(d, PartitionDiagram):
        for b in d.blocks:
            n_top = sum(1 for v in b if v[0] == TOP)
            if n_top > 1 or n_top == len(b):
                return False
        return True
    _, _, top = d.edge_kinds()
    return not top


def is_planar(d):
    """No crossing under the order b1 < ... < bn < tm < ... < t1."""
    n, m = d.n, d.m
    pos = [tuple(sorted(iota_key(v, n, m) for v in e)) for e in d.edges]
    for (x, y), (z, w) in combinations(pos, 2):
        if x < z < y < w or z < x < w < y:
            return False
    return True


def transpose(d):
    """Exchange the two rows; an involution."""
    if isinstance(d, SignedBrauerDiagram):
        raise UnsupportedVariant("transpose of signed diagrams is not defined")
    if isinstance(d, PartialInjection):
        return PartialInjection(d.m, d.n, [(b, a) for a, b in d.pairs])
    flip = lambda v: (1 - v[0], v[1])
    if isinstance(d, WalledBrauerDiagram):
        return WalledBrauerDiagram._raw_walled(
            d.top_colors,
            d.bottom_colors,
            [_canon_edge((flip(a), flip(b))) for a, b in d.edges],
        )
    if isinstance(d, PartitionDiagram):
        return PartitionDiagram._raw(
            d.m, d.n, [tuple(flip(v) for v in b) for b in d.blocks]
        )
    return BrauerDiagram._raw(
        d.m, d.n, [_canon_edge((flip(a), flip(b))) for a, b in d.edges]
    )


def disjoint_union(d1, d2):
    """Place d2 to the right of d1; vertices of d2 are re-indexed."""
    if type(d1) is not type(d2):
        raise VariantMismatch(
            f"cannot union {type(d1).__name__} with {type(d2).__name__}"
        )
    if isinstance(d1, WalledBrauerDiagram):
        return _walled_union(d1, d2)
    if isinstance(d1, PartialInjection):
        pairs = list(d1.pairs) + [(a + d1.n, b + d1.m) for a, b in d2.pairs]
        return PartialInjection(d1.n + d2.n, d1.m + d2.m, pairs)
    shift = lambda v: (v[0], v[1] + (d1.n if v[0] == BOTTOM else d1.m))
    if isinstance(d1, PartitionDiagram):
        blocks = list(d1.blocks) + [
            tuple(shift(v) for v in b) for b in d2.blocks
        ]
        return PartitionDiagram._raw(d1.n + d2.n, d1.m + d2.m, blocks)
    edges = list(d1.edges) + [(shift(a), shift(b)) for a, b in d2.edges]
    if isinstance(d1, SignedBrauerDiagram):
        arrows = list(d1.arrows) + [
            (shift(a), shift(b)) for a, b in d2.arrows
        ]
        return SignedBrauerDiagram._raw_signed(
            d1.n + d2.n, d1.m + d2.m, edges, arrows
        )
    return BrauerDiagram._raw(d1.n + d2.n, d1.m + d2.m, edges)


def _walled_union(d1, d2):
    # color-1 vertices of both diagrams precede all color-2 vertices
    nb = (d1.bottom_colors[0] + d2.bottom_colors[0],
          d1.bottom_colors[1] + d2.bottom_colors[1])
    nt = (d1.top_colors[0] + d2.top_colors[0],
          d1.top_colors[1] + d2.top_colors[1])

    def f1(v):
        row, i = v
        split = d1.bottom_colors[0] if row == BOTTOM else d1.top_colors[0]
        add = d2.bottom_colors[0] if row == BOTTOM else d2.top_colors[0]
        return (row, i) if i <= split else (row, i + add)

    def f2(v):
        row, i = v
        split = d2.bottom_colors[0] if row == BOTTOM else d2.top_colors[0]
        c1, c2 = d1.bottom_colors if row == BOTTOM else d1.top_colors
        return (row, i + c1) if i <= split else (row, i + c1 + c2)

    edges = [_canon_edge((f1(a), f1(b))) for a, b in d1.edges] + [
        _canon_edge((f2(a), f2(b))) for a, b in d2.edges
    ]
    return WalledBrauerDiagram._raw_walled(nb, nt, edges)


def _matchings(points):
    if not points:
        yield []
        return
    first = points[0]
    for idx in range(1, len(points)):
        rest = points[1:idx] + points[idx + 1 :]
        for sub in _matchings(rest):
            yield [(first, points[idx])] + sub


def _set_partitions(points):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for sub in _set_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]


def enumerate_diagrams(variant, bottom, top):
    """All canonical diagrams of the hom space, in sorted order."""
    if variant == "walled":
        n1, n2 = bottom
        m1, m2 = top

        def color(v):
            row, i = v
            return 1 if i <= (n1 if row == BOTTOM else m1) else 2

        points = [(BOTTOM, i) for i in range(1, n1 + n2 + 1)] + [
            (TOP, i) for i in range(1, m1 + m2 + 1)
        ]
        out = []
        if len(points) % 2 == 0:
            for edges in _matchings(points):
                ok = True
                for a, b in edges:
                    same_row = a[0] == b[0]
                    if (color(a) == color(b)) == same_row:
                        ok = False
                        break
                if ok:
                    out.append(WalledBrauerDiagram._raw_walled(bottom, top, edges))
        return sorted(out, key=lambda d: d.sort_key())

    n, m = bottom, top
    points = [(BOTTOM, i) for i in range(1, n + 1)] + [
        (TOP, i) for i in range(1, m + 1)
    ]
    if variant in ("brauer", "signed", "temperley_lieb"):
        if (n + m) % 2 != 0:
            return []
        out = []
        for edges in _matchings(points):
            d = BrauerDiagram._raw(n, m, edges)
            if variant == "temperley_lieb" and not is_planar(d):
                continue
            if variant == "signed":
                arrows = [
                    canonical_arrow(e, n, m) for e in d.edges if e[0][0] == e[1][0]
                ]
                d = SignedBrauerDiagram._raw_signed(n, m, d.edges, arrows)
            out.append(d)
        return sorted(out, key=lambda d: d.sort_key())
    if variant in PARTITION_FAMILY:
        out = [
            PartitionDiagram._raw(n, m, blocks)
            for blocks in _set_partitions(points)
        ]
        return sorted(out, key=lambda d: d.sort_key())
    if variant == "fisharp":
        out = []
        bot = list(range(1, n + 1))
        for k in range(min(n, m) + 1):
            for dom in combinations(bot, k):
                for img in _injections(k, m):
                    out.append(PartialInjection(n, m, list(zip(dom, img))))
        return sorted(out, key=lambda d: d.sort_key())
    raise UnsupportedVariant(f"unknown variant {variant!r}")


def _injections(k, m):
    if k == 0:
        yield ()
        return
    for img in combinations(range(1, m + 1), k):
        yield from permutations(img)


def identity_diagram(variant, size):
    """id on the object [size] (a color pair for the walled variant)."""
    if variant == "walled":
        n1, n2 = size
        edges = [((BOTTOM, i), (TOP, i)) for i in range(1, n1 + n2 + 1)]
        return WalledBrauerDiagram(size, size, edges)
    if variant in PARTITION_FAMILY:
        blocks = [((BOTTOM, i), (TOP, i)) for i in range(1, size + 1)]
        return PartitionDiagram(size, size, blocks)
    if variant == "fisharp":
        return PartialInjection(size, size, [(i, i) for i in range(1, size + 1)])
    edges = [((BOTTOM, i), (TOP, i)) for i in range(1, size + 1)]
    if variant == "signed":
        return SignedBrauerDiagram(size, size, edges)
    return BrauerDiagram(size, size, edges)
