"""
Constant-time rules joining the internal components.

One to three failed vertices leave at most three internal components. The rules
decide from the per-vertex tables alone which pairs of them are joined by a
back-edge (``direct``) or by a hanging subtree with back-edges to both
(``mediation``).

For a chain, ``u`` an ancestor of ``v`` and ``v`` an ancestor of ``w``, the
components are ``A`` (root 1), ``B`` (root ``c``, the child of ``u`` toward
``v``) and ``C`` (root ``d``, the child of ``v`` toward ``w``). The analysis
branches on where ``Mp(c)`` lies and then on where ``Mp(d)`` lies.

Everything here is numbered by the base tree; points computed on a view are
translated back before they are compared. Ancestry, and the order of the
ancestors of a vertex, is the same in every view.
"""
import logging
from itertools import combinations
from typing import List, NamedTuple, Optional, Set, Tuple

from graph_core import BOTTOM, View
from utils.errors import TableLookupError

logger = logging.getLogger(__name__)

DIRECT = "direct"
MEDIATION = "mediation"

# targets a piece of C can be attached to
TO_A, TO_B, TO_AB = "A", "B", "AB"


class Link(NamedTuple):
    a: int
    b: int
    kind: str


class CaseAnalysis:
    """Rules for one sorted failure set; fills :attr:`links` and :attr:`labels`."""

    def __init__(self, oracle, failed: Tuple[int, ...]):
        self.tree = oracle.tree
        self.params = oracle.params
        self.mp = oracle.extremes.mp
        self.tables = oracle.tables
        self.base = oracle.param_views[View.BASE]
        self.high = oracle.param_views[View.HIGH_DEC]
        self.low = oracle.param_views[View.LOW_INC]
        self.failed = failed
        self.links: List[Link] = []
        self.labels: List[str] = []
        self.u = self.v = self.w = self.c = self.d = BOTTOM

    # --- LINKS AND LOOKUPS ---

    def link(self, a: int, b: int, kind: str) -> None:
        if a != b:
            self.links.append(Link(min(a, b), max(a, b), kind))

    def note(self, label: str) -> None:
        self.labels.append(label)

    def edges(self) -> Set[Tuple[int, int]]:
        return {(link.a, link.b) for link in self.links}

    def entry(self, table: str, key: int):
        try:
            return getattr(self.tables, table)[key]
        except KeyError:
            raise TableLookupError(table, key) from None

    def points(self, pv, x: int) -> Tuple[int, int]:
        """``Lp(x)`` and ``Rp(x)`` on the view of ``pv``, as base vertices."""
        y = pv.translate(x)
        return pv.untranslate(int(pv.lp[y])), pv.untranslate(int(pv.rp[y]))

    def skip_points(self, x: int, z: int) -> Tuple[int, int]:
        """Leftmost and rightmost ``T_highDec`` points of ``x`` whose lowest edge below ``p(x)`` avoids ``z``."""
        lp, rp = self.points(self.high, x)
        left = lp if lp == BOTTOM or self.l1(lp) != z else int(self.tables.skip_l1_of_lp[x])
        right = rp if rp == BOTTOM or self.l1(rp) != z else int(self.tables.skip_r1_of_rp[x])
        return left, right

    def low_child(self, x: int, i: int) -> int:
        """The ``i``-th child of ``x`` on ``T_lowInc`` (BOTTOM if there are fewer)."""
        kids = self.low.tree.children[self.low.translate(x)]
        return self.low.untranslate(kids[i]) if i < len(kids) else BOTTOM

    def child(self, v: int, x: int) -> int:
        return self.base.child_toward(v, x)

    def l1(self, x: int) -> int:
        return int(self.params.l1[x])

    def l2(self, x: int) -> int:
        return int(self.params.l2[x])

    def low1(self, x: int) -> int:
        return int(self.params.low1[x])

    def low2(self, x: int) -> int:
        return int(self.params.low2[x])

    def high1(self, x: int) -> int:
        return int(self.params.high1[x])

    def high2(self, x: int) -> int:
        return int(self.params.high2[x])

    # --- DISPATCH ---

    def run(self, configuration: str) -> None:
        f = self.failed
        if configuration == "pair/related":
            self.pair_link(*f)
        elif configuration == "triple/pair_plus_one":
            u, v = next((a, b) for a, b in combinations(f, 2)
                        if self.tree.is_ancestor(a, b) or self.tree.is_ancestor(b, a))
            self.pair_link(u, v)
        elif configuration == "triple/fork/different_children":
            u, v, w = f
            self.pair_link(u, v)
            self.pair_link(u, w)
        elif configuration == "triple/fork/same_child":
            self.fork_same_child(*f)
        elif configuration == "triple/chain":
            self.chain(*f)

    # --- ONE FAILED ANCESTOR ---

    def pair_link(self, u: int, v: int) -> None:
        c = self.child(u, v)
        kind = self.pair_rule(u, v, c)
        if kind is not None:
            self.link(1, c, kind)

    def pair_rule(self, u: int, v: int, c: int) -> Optional[str]:
        """
        How ``T(c) \\ T(v)`` reaches the part above ``u`` when nothing else
        fails below ``u``: on ``T_highDec``, from ``Lp(c)``, ``Rp(c)`` and the
        ``high1`` point of the child of ``v`` above ``Lp(c)``.
        """
        lp, rp = self.points(self.high, c)
        if lp == BOTTOM:
            return None
        if not self.tree.is_ancestor(v, lp) or not self.tree.is_ancestor(v, rp):
            return DIRECT
        return MEDIATION if self.high1(self.child(v, lp)) >= c else None

    def fork_same_child(self, u: int, v: int, w: int) -> None:
        tree = self.tree
        c = self.child(u, v)

        def in_b(x):
            return tree.is_ancestor(c, x) and not tree.is_ancestor(v, x) and not tree.is_ancestor(w, x)

        def side(x):
            return v if tree.is_ancestor(v, x) else w

        lp, rp = self.points(self.high, c)
        if lp == BOTTOM:
            self.note("fork/no_edges")
            return
        if in_b(lp) or in_b(rp):
            self.note("fork/direct")
            self.link(1, c, DIRECT)
            return
        if side(lp) == side(rp):
            self.note("fork/one_side")
            if in_b(self.high1(self.child(side(lp), lp))):
                self.link(1, c, MEDIATION)
            return
        self.note("fork/both_sides")
        third = self.low_child(int(self.mp[c]), 2)
        if third != BOTTOM and self.low1(third) != BOTTOM and self.low1(third) < u:
            self.link(1, c, DIRECT)
            return
        entry = self.entry("first_two_low_children", c)
        if any(in_b(x) for x in entry.first_points + entry.second_points):
            self.link(1, c, DIRECT)
            return
        for left in (entry.first_points[0], entry.second_points[0]):
            if in_b(self.high1(self.child(side(left), left))):
                self.link(1, c, MEDIATION)
                return

    # --- CHAIN ---

    def in_a(self, x: int) -> bool:
        return x != BOTTOM and not self.tree.is_ancestor(self.u, x)

    def in_b(self, x: int) -> bool:
        return self.tree.is_ancestor(self.c, x) and not self.tree.is_ancestor(self.v, x)

    def in_c(self, x: int) -> bool:
        return self.tree.is_ancestor(self.d, x) and not self.tree.is_ancestor(self.w, x)

    def in_target(self, x: int, target: str) -> bool:
        if target == TO_A:
            return self.in_a(x)
        if target == TO_B:
            return self.in_b(x)
        return self.in_a(x) or self.in_b(x)

    def target_root(self, target: str) -> int:
        return self.c if target == TO_B else 1

    def locate(self, mp: int) -> str:
        tree = self.tree
        if mp == BOTTOM:
            return "bottom"
        if mp == self.v:
            return "v"
        if mp == self.w:
            return "w"
        if tree.is_proper_ancestor(self.w, mp):
            return "below_w"
        if tree.is_ancestor(self.d, mp):
            return "in_C"
        if tree.is_ancestor(self.v, mp):
            return "hanging_v"
        return "in_B"

    def chain(self, u: int, v: int, w: int) -> None:
        self.u, self.v, self.w = u, v, w
        self.c = self.child(u, v)
        self.d = self.child(v, w)
        loc_c = self.locate(int(self.mp[self.c]))
        loc_d = self.locate(int(self.mp[self.d]))
        self.note(f"chain/mp_c={loc_c}")
        self.note(f"chain/mp_c={loc_c}/mp_d={loc_d}")
        handlers = {
            "bottom": self.mp_c_bottom,
            "in_B": self.mp_c_in_b,
            "v": self.mp_c_at_v,
            "hanging_v": self.mp_c_hanging_v,
            "below_w": self.mp_c_below_w,
            "w": self.mp_c_at_w,
            "in_C": self.mp_c_in_c,
        }
        handlers[loc_c](loc_d)

    def low_triple_hits(self, entry, target: str) -> bool:
        return any(self.in_target(x, target) for x in (entry.first, entry.second, entry.third))

    def c_to_b(self, left: int, right: int) -> Optional[str]:
        """
        Link from ``C`` to ``B`` given the ``T_highDec`` extreme points of ``T(d)``
        with a back-edge into ``B``.
        """
        if left == BOTTOM:
            return None
        if self.in_c(left) or self.in_c(right):
            return DIRECT
        return MEDIATION if self.in_c(self.high1(self.child(self.w, left))) else None

    def attach_c(self, loc_d: str, target: str) -> None:
        """Join ``C`` to ``target`` when every other link is already known."""
        d, w, u = self.d, self.w, self.u
        root = self.target_root(target)
        if loc_d == "below_w":
            dd = self.child(w, int(self.mp[d]))
            if not self.in_c(self.high1(dd)):
                return
            if target == TO_AB:
                reaches = self.in_b(self.high1(d)) or self.in_a(self.low1(dd))
            else:
                lo = self.low1(dd)
                reaches = self.in_target(lo, target) or (lo == u and self.in_target(self.low2(dd), target))
            if reaches:
                self.link(d, root, MEDIATION)
        elif loc_d == "w":
            if self.low_triple_hits(self.entry("three_low", d), target):
                self.link(d, root, MEDIATION)
        elif loc_d == "in_C":
            lp, rp = self.points(self.high, d)
            x = lp if self.in_c(lp) else rp
            lo = self.l1(x)
            if (lo != u and self.in_target(lo, target)) or (lo == u and self.in_target(self.l2(x), target)):
                self.link(d, root, DIRECT)
                return
            kind = self.c_to_b(*self.skip_points(d, u))
            if kind is not None:
                self.link(d, root, kind)

    def mp_c_bottom(self, loc_d: str) -> None:
        self.attach_c(loc_d, TO_B)

    def mp_c_in_b(self, loc_d: str) -> None:
        self.link(1, self.c, DIRECT)
        self.attach_c(loc_d, TO_AB)

    def mp_c_hanging_v(self, loc_d: str) -> None:
        x = self.child(self.v, int(self.mp[self.c]))
        if self.in_b(self.high1(x)):
            self.link(1, self.c, MEDIATION)
        self.attach_c(loc_d, TO_B)

    def mp_c_at_v(self, loc_d: str) -> None:
        c, d, u = self.c, self.d, self.u
        lowest = self.entry("three_low", c)
        only = self.tables.lemma55.get(c)
        if self.in_a(lowest.first) and not (only is not None and only.anchor == d):
            self.note("chain/v/other_child")
            self.link(1, c, MEDIATION)
            self.attach_c(loc_d, TO_AB)
            return
        h1, lo = self.high1(d), self.low1(d)
        if loc_d == "bottom":
            self.note("chain/v/no_edges")
        elif self.in_b(h1) and not self.in_a(lo):
            self.note("chain/v/b_only")
            self.attach_c(loc_d, TO_B)
        elif self.in_b(h1):
            self.note("chain/v/through_d")
            self.through_d()
        elif h1 == u and lo == u:
            self.note("chain/v/u_only")
        else:
            self.note("chain/v/a_only")
            self.attach_c(loc_d, TO_A)

    def through_d(self) -> None:
        """``d`` is the only child of ``v`` reaching both ``A`` and ``B``."""
        c, d, v, w = self.c, self.d, self.v, self.w
        segment = self.entry("lemma55", c)
        a2 = self.entry("extreme_high_a2", c)
        left, right = a2.left, a2.right
        bc = self.c_to_b(*segment.high_dec)
        if bc is not None:
            self.note("chain/v/through_d/c_reaches_b")
            self.link(c, d, bc)
            if self.in_c(left) or self.in_c(right):
                self.link(1, d, DIRECT)
                return
            f = self.child(w, left)
            if f == self.child(w, right):
                h1, h2 = self.high1(f), self.high2(f)
                if self.in_c(h1):
                    self.link(1, d, MEDIATION)
                elif self.in_b(h1) or (h1 == v and self.in_b(h2)):
                    self.link(1, c, MEDIATION)
                return
            for x in a2.params:
                if self.in_c(x):
                    self.link(1, d, MEDIATION)
                elif self.in_b(x):
                    self.link(1, c, MEDIATION)
            return
        self.note("chain/v/through_d/c_misses_b")
        if self.in_c(left) or self.in_c(right):
            self.link(1, d, DIRECT)
        else:
            f = self.child(w, left)
            if f == self.child(w, right):
                if self.in_c(self.high1(f)):
                    self.link(1, d, MEDIATION)
            elif self.in_c(a2.params.first):
                self.link(1, d, MEDIATION)
        low_left = segment.low_inc[0]
        if low_left != BOTTOM and self.in_a(self.low1(self.child(w, low_left))):
            self.link(1, c, MEDIATION)

    def c_to_b_from_extremes(self):
        """
        With no edge from ``C`` to ``A``: the link from ``C`` to ``B`` found through
        the ``T_highDec`` extreme point of ``d`` lying in ``C``, and the segment
        entry consulted (None when that point already lands in ``B``).
        """
        lp, rp = self.points(self.high, self.d)
        use_left = self.in_c(lp)
        x = lp if use_left else rp
        if self.l1(x) != self.u:
            return DIRECT, None
        segment = self.entry("lemma53_lp" if use_left else "lemma53_rp", self.d)
        return self.c_to_b(*segment.high_dec), segment

    def mp_c_below_w(self, loc_d: str) -> None:
        c, d, v, w = self.c, self.d, self.v, self.w
        dd = self.child(w, int(self.mp[c]))
        h1, h2 = self.high1(dd), self.high2(dd)
        a_to_b = self.in_b(h1) or (h1 == v and self.in_b(h2))
        if loc_d == "below_w":
            if self.in_c(h1):
                self.link(1, d, MEDIATION)
            if self.in_b(self.high1(d)):
                self.link(1, c, MEDIATION)
        elif loc_d == "w":
            if self.in_c(h1):
                self.link(1, d, MEDIATION)
                if self.low_triple_hits(self.entry("three_low_primed", d), TO_B):
                    self.link(c, d, MEDIATION)
                elif self.counting_under_w():
                    self.link(c, d, MEDIATION)
                return
            if a_to_b:
                self.link(1, c, MEDIATION)
            if self.low_triple_hits(self.entry("three_low", d), TO_B):
                self.link(c, d, MEDIATION)
        elif loc_d == "in_C":
            kind, _ = self.c_to_b_from_extremes()
            if kind is not None:
                self.link(c, d, kind)
            if self.in_c(h1):
                self.link(1, d, MEDIATION)
            elif a_to_b:
                self.link(1, c, MEDIATION)

    def counting_under_w(self) -> bool:
        """
        Whether the child of ``w`` holding ``Mp(c)`` has a back-edge into ``B``,
        when no other child of ``w`` joins ``B`` and ``C``. The edges of
        ``B_p(d)`` from the other children are counted and summed from the
        tables; what is left beyond ``B_p(c)`` lands on ``u`` or in ``B``.
        """
        c, d, u, v = self.c, self.d, self.u, self.v
        items = self.entry("items74", d)
        p = self.params
        n_other = items.item1a - items.item2 + items.item3
        s_other = items.item1b - items.item2 * v + items.item3 * u
        n_rest = int(p.bp_count[d]) - n_other - int(p.bp_count[c])
        s_rest = int(p.sum_y[d]) - s_other - int(p.sum_y[c])
        self.note("counting/under_w_child")
        return s_rest > n_rest * u

    def mp_c_at_w(self, loc_d: str) -> None:
        c, d, w = self.c, self.d, self.w
        extremes = self.entry("extreme_high_mw", c)
        if loc_d == "w":
            left = self.tables.lemma56_query(View.HIGH_DEC, c, d)[0]
            bc = MEDIATION if left != BOTTOM and self.in_c(self.high1(self.child(w, left))) else None
            segment = None
        else:
            bc, segment = self.c_to_b_from_extremes()
        if bc is not None:
            self.link(c, d, bc)
        if self.in_c(extremes.first):
            self.note("chain/w/first_high_in_C")
            self.link(1, d, MEDIATION)
            if bc is None:
                if loc_d == "w":
                    z = self.tables.lemma56_query(View.LOW_INC, c, d)[0]
                else:
                    z = segment.low_inc[0]
                if z != BOTTOM and self.in_a(self.low1(self.child(w, z))):
                    self.link(1, c, MEDIATION)
        elif any(self.in_b(x) for x in extremes):
            self.link(1, c, MEDIATION)

    def mp_c_in_c(self, loc_d: str) -> None:
        c, d, u, w = self.c, self.d, self.u, self.w
        self.link(1, d, DIRECT)
        mp_c, mp_d = int(self.mp[c]), int(self.mp[d])
        if mp_d == mp_c:
            self.note("chain/in_C/same_mp")
            high = self.tables.lemma56_query(View.HIGH_DEC, c, d)
            if self.b_from_segment(high) and high[0] != BOTTOM:
                self.b_to_a_below_w(self.tables.lemma56_query(View.LOW_INC, c, d)[0])
            return
        _, rp = self.points(self.low, d)
        if self.l1(rp) == u:
            self.note("chain/in_C/low_r_is_u")
            self.b_from_table("lemma53_low_rp")
            return
        if self.in_c(rp):
            self.note("chain/in_C/low_r_in_C")
            self.link(c, d, DIRECT)
            return
        second = self.low_child(mp_d, 1)
        if self.low1(second) == u:
            self.note("chain/in_C/second_low_is_u")
            self.b_from_table("lemma54")
            return
        if not self.tree.is_ancestor(second, w):
            self.note("chain/in_C/second_child_in_C")
            self.link(c, d, DIRECT)
            return
        self.note("chain/in_C/second_child_above_w")
        items = self.entry("items76", d)
        kind = self.c_to_b(items.left, items.right)
        if kind is not None:
            self.link(c, d, kind)
        elif self.counting_in_c(items):
            self.link(c, d, DIRECT)

    def b_from_segment(self, high: Tuple[int, int]) -> bool:
        """Link ``B`` to ``C`` from segment points; True when ``B`` is still unattached."""
        kind = self.c_to_b(*high)
        if kind is not None:
            self.link(self.c, self.d, kind)
            return False
        return True

    def b_to_a_below_w(self, low_left: int) -> None:
        if self.in_a(self.low1(self.child(self.w, low_left))):
            self.link(1, self.c, MEDIATION)

    def b_from_table(self, table: str) -> None:
        segment = self.entry(table, self.d)
        if self.b_from_segment(segment.high_dec) and segment.high_dec[0] != BOTTOM:
            self.b_to_a_below_w(segment.low_inc[0])

    def counting_in_c(self, items) -> bool:
        """
        Whether a back-edge joins ``B`` to the child of ``Mp(d)`` holding
        ``Mp(c)``. The edges of ``B_p(d)`` from the other child come from
        hanging subtrees of ``w`` and are counted from the tables.
        """
        c, d, u, v, w = self.c, self.d, self.u, self.v, self.w
        p = self.params
        f = self.child(w, items.left)
        if f == self.child(w, items.right):
            n, s = int(p.bp_count[f]), int(p.sum_y[f])
            if self.high1(f) == v:
                n -= int(p.num_high[f])
                s -= int(p.num_high[f]) * v
        else:
            n = items.item1a - items.item2
            s = items.item1b - items.item2 * v
        n_rest = int(p.bp_count[d]) - int(p.bp_count[c]) - n
        s_rest = int(p.sum_y[d]) - int(p.sum_y[c]) - s
        self.note("counting/in_C")
        return s_rest > n_rest * u
