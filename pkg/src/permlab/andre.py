"""André permutations, André cycles, increasing binary trees, and the maps
between them.

Words here are tuples of distinct positive integers on any ground set;
comparisons always use letter order, never positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import (
    Boundary,
    CycleStyle,
    DomainError,
    Permutation,
    andre_x_factorization,
    arrange_cycles,
    cycle_form,
    stat_set,
)
from .transform import _erase

__all__ = [
    "is_andre",
    "is_cycle_andre",
    "is_cycle_up_down",
    "is_alternating",
    "IncBinaryTree",
    "TreeStats",
    "omega",
    "omega_inv",
    "tree_stats",
    "is_andre_tree",
    "parse_tree",
    "phi_ca",
    "phi_ca_inv",
    "zeta",
    "zeta_inv",
    "two_child_positions",
    "phi_i",
    "phi_i_inv",
    "Psi",
    "Psi_inv",
    "Phi",
    "Phi_inv",
]

Word = tuple[int, ...]


# recognition -------------------------------------------------------------------


def _as_word(w) -> Word:
    return w.word if isinstance(w, Permutation) else tuple(w)


def _andre_by_factorization(w: Word, kind: int) -> bool:
    # no double descents, with 0 on both sides of the word
    padded = (0,) + w + (0,)
    for i in range(1, len(w) + 1):
        if padded[i - 1] > padded[i] > padded[i + 1]:
            return False
    for x in w:
        _, lam, _, rh, _ = andre_x_factorization(w, x)
        if not rh:
            if lam:
                return False
        elif lam:
            if kind == 1 and not max(lam) < max(rh):
                return False
            if kind == 2 and not min(rh) < min(lam):
                return False
    return True


@lru_cache(maxsize=1 << 16)
def _andre_recursive(w: Word, kind: int) -> bool:
    if len(w) <= 1:
        return True
    i = w.index(min(w))
    v, vp = w[:i], w[i + 1:]
    if kind == 1:
        if max(v + vp) not in vp:
            return False
    else:
        if v and (not vp or not min(vp) < min(v)):
            return False
    return _andre_recursive(v, kind) and _andre_recursive(vp, kind)


def is_andre(w, kind: int = 1, method: str = "factorization") -> bool:
    """André permutation of the first or second kind.

    ``method`` is ``"factorization"`` (x-factorization conditions) or
    ``"recursive"`` (split at the least letter).
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    w = _as_word(w)
    if method == "factorization":
        return _andre_by_factorization(w, kind)
    if method == "recursive":
        return _andre_recursive(w, kind)
    raise ValueError(f"unknown method {method!r}")


def is_cycle_andre(p: Permutation) -> bool:
    """Every cycle, written from its least letter, has an André (kind 1) tail."""
    return all(is_andre(c[1:], 1) for c in cycle_form(p, CycleStyle.MIN_FIRST))


def is_alternating(w: Sequence[int]) -> bool:
    """``w1 < w2 > w3 < ...``"""
    return all((w[i] < w[i + 1]) == (i % 2 == 0) for i in range(len(w) - 1))


def is_cycle_up_down(p: Permutation) -> bool:
    return all(is_alternating(c) for c in cycle_form(p, CycleStyle.MIN_FIRST))


# increasing binary trees -----------------------------------------------------------


@dataclass(frozen=True)
class IncBinaryTree:
    label: int
    left: "IncBinaryTree | None" = None
    right: "IncBinaryTree | None" = None

    def __post_init__(self):
        for child in (self.left, self.right):
            if child is not None and not child.label > self.label:
                raise DomainError("labels must increase away from the root")

    def labels(self) -> list[int]:
        """Labels in inorder (symmetric order)."""
        return list(omega_inv(self))

    def nodes_inorder(self) -> Iterator["IncBinaryTree"]:
        if self.left:
            yield from self.left.nodes_inorder()
        yield self
        if self.right:
            yield from self.right.nodes_inorder()

    def max(self) -> int:
        return max(omega_inv(self))

    def relabel(self, mapping: dict[int, int]) -> "IncBinaryTree":
        return IncBinaryTree(
            mapping[self.label],
            self.left.relabel(mapping) if self.left else None,
            self.right.relabel(mapping) if self.right else None,
        )

    def __str__(self) -> str:
        if self.left is None and self.right is None:
            return str(self.label)
        l = str(self.left) if self.left else "-"
        r = str(self.right) if self.right else "-"
        return f"{self.label}({l}|{r})"


_TOKEN = re.compile(r"\s*(\d+|[()|\-])")


def parse_tree(text: str) -> IncBinaryTree | None:
    """Parse ``"1(2|3(-|4))"``; a bare label is a leaf and ``-`` the empty tree."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DomainError(f"cannot parse tree {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    k = 0

    def take() -> str:
        nonlocal k
        if k >= len(tokens):
            raise DomainError(f"truncated tree {text!r}")
        tok = tokens[k]
        k += 1
        return tok

    def node():
        tok = take()
        if tok == "-":
            return None
        if not tok.isdigit():
            raise DomainError(f"unexpected {tok!r} in tree {text!r}")
        if k < len(tokens) and tokens[k] == "(":
            take()
            left = node()
            if take() != "|":
                raise DomainError(f"expected '|' in tree {text!r}")
            right = node()
            if take() != ")":
                raise DomainError(f"expected ')' in tree {text!r}")
            return IncBinaryTree(int(tok), left, right)
        return IncBinaryTree(int(tok))

    tree = node()
    if k != len(tokens):
        raise DomainError(f"trailing input in tree {text!r}")
    if tree is not None:
        labels = tree.labels()
        if len(set(labels)) != len(labels):
            raise DomainError("tree labels must be distinct")
    return tree


def omega(w) -> IncBinaryTree | None:
    """Increasing binary tree of a word: the least letter is the root; the
    letters before and after it form the left and right subtrees."""
    w = _as_word(w)
    if not w:
        return None
    i = w.index(min(w))
    return IncBinaryTree(w[i], omega(w[:i]), omega(w[i + 1:]))


def omega_inv(t: IncBinaryTree | None) -> Word:
    """Inorder reading."""
    if t is None:
        return ()
    return omega_inv(t.left) + (t.label,) + omega_inv(t.right)


@dataclass(frozen=True)
class TreeStats:
    leaf: int
    rface: int
    rface_prime: int
    andre1: bool
    andre2: bool


def _right_face(t: IncBinaryTree) -> list[IncBinaryTree]:
    out = []
    node = t
    while node is not None:
        out.append(node)
        node = node.right
    return out


def is_andre_tree(t: IncBinaryTree | None, kind: int) -> bool:
    if t is None:
        return True
    for v in t.nodes_inorder():
        if v.left is not None and v.right is None:
            return False
        if v.left is not None and v.right is not None:
            if kind == 1 and not v.left.max() < v.right.max():
                return False
            if kind == 2 and not v.left.label > v.right.label:
                return False
    return True


def tree_stats(t: IncBinaryTree | None) -> TreeStats:
    if t is None:
        return TreeStats(0, 0, 0, True, True)
    leaves = sum(1 for v in t.nodes_inorder() if v.left is None and v.right is None)
    face = _right_face(t)
    # interior right-face vertices whose only successor is on the right;
    # the leaf that ends the face is not interior
    prime = sum(1 for v in face if v.left is None and v.right is not None)
    return TreeStats(leaves, len(face), prime, is_andre_tree(t, 1), is_andre_tree(t, 2))


# cycle André permutations ----------------------------------------------------------


def phi_ca(p: Permutation) -> Permutation:
    """Cycles with their least letter last, by increasing least letter,
    parentheses erased, then n+1 appended."""
    if not is_cycle_andre(p):
        raise DomainError(f"{p} is not a cycle André permutation")
    return Permutation(_erase(cycle_form(p, CycleStyle.MIN_LAST_INC_MIN)) + (len(p) + 1,))


def phi_ca_inv(q: Permutation) -> Permutation:
    q.require_standard()
    if not q.word or q.word[-1] != len(q):
        raise DomainError(f"{q} does not end with its largest letter")
    w = q.word[:-1]
    cycles, cur = [], []
    rmin = stat_set(Permutation(w), "rmin") if w else set()
    for a in w:
        cur.append(a)
        if a in rmin:
            cycles.append(tuple(cur))
            cur = []
    p = Permutation.from_cycles(cycles, len(w))
    if not is_cycle_andre(p):
        raise DomainError(f"{q} is not the image of a cycle André permutation")
    return p


def _is_andre_cycle(p: Permutation) -> bool:
    cyc = p.cycles()
    return len(cyc) == 1 and is_cycle_andre(p)


def zeta(c: Permutation) -> Permutation:
    """André n-cycle ``(1, a2, ..., n)`` to the André word ``(a2-1) ... (n-1)``."""
    if len(c) < 2 or not _is_andre_cycle(c):
        raise DomainError(f"{c} is not an André cycle on [n], n >= 2")
    (cyc,) = arrange_cycles(c.cycles(), CycleStyle.MIN_FIRST)
    return Permutation(tuple(a - 1 for a in cyc[1:]))


def zeta_inv(w: Permutation) -> Permutation:
    if not is_andre(w.word, 1):
        raise DomainError(f"{w} is not an André permutation of the first kind")
    return Permutation.from_cycles([(1,) + tuple(a + 1 for a in w.word)], len(w) + 1)


# the operators phi_i and Psi ---------------------------------------------------------


def two_child_positions(t: IncBinaryTree | None) -> list[int]:
    """Inorder positions (1-based) of the vertices with two successors."""
    if t is None:
        return []
    return [
        i for i, v in enumerate(t.nodes_inorder(), 1) if v.left is not None and v.right is not None
    ]


def _replace_at(t: IncBinaryTree, pos: int, new: IncBinaryTree) -> IncBinaryTree:
    size_left = len(omega_inv(t.left))
    if pos == size_left + 1:
        return new
    if pos <= size_left:
        return IncBinaryTree(t.label, _replace_at(t.left, pos, new), t.right)
    return IncBinaryTree(t.label, t.left, _replace_at(t.right, pos - size_left - 1, new))


def _node_at(t: IncBinaryTree, pos: int) -> IncBinaryTree:
    for i, v in enumerate(t.nodes_inorder(), 1):
        if i == pos:
            return v
    raise ValueError(f"no vertex at position {pos}")


def _rank_relabel(sub: IncBinaryTree, new_labels: set[int]) -> IncBinaryTree:
    old = sorted(omega_inv(sub))
    return sub.relabel(dict(zip(old, sorted(new_labels))))


def _exchange(v: IncBinaryTree, out_left: int, out_right: int) -> IncBinaryTree:
    # out_left leaves the left subtree for the right one, out_right goes the other way
    left_labels = set(omega_inv(v.left)) - {out_left} | {out_right}
    right_labels = set(omega_inv(v.right)) - {out_right} | {out_left}
    return IncBinaryTree(
        v.label, _rank_relabel(v.left, left_labels), _rank_relabel(v.right, right_labels)
    )


def _two_child(t: IncBinaryTree, i: int) -> IncBinaryTree:
    v = _node_at(t, i)
    if v.left is None or v.right is None:
        raise ValueError(f"vertex at position {i} does not have two successors")
    return v


def phi_i(t: IncBinaryTree, i: int) -> IncBinaryTree:
    """If the left child is below the right child, swap the left child with
    the maximum of the right subtree and relabel both subtrees by rank."""
    v = _two_child(t, i)
    if v.left.label > v.right.label:
        return t
    return _replace_at(t, i, _exchange(v, v.left.label, v.right.max()))


def phi_i_inv(t: IncBinaryTree, i: int) -> IncBinaryTree:
    v = _two_child(t, i)
    if v.left.max() < v.right.max():
        return t
    return _replace_at(t, i, _exchange(v, v.left.max(), v.right.label))


def Psi(t: IncBinaryTree | None, order: Sequence[int] | None = None) -> IncBinaryTree | None:
    """Product of phi_i over the two-child vertices, taken by increasing
    vertex label unless ``order`` (a sequence of positions) says otherwise.
    The operators commute, so the order does not change the result."""
    if t is None:
        return None
    if not is_andre_tree(t, 1):
        raise DomainError("Psi expects an André tree of the first kind")
    if order is None:
        word = omega_inv(t)
        order = sorted(two_child_positions(t), key=lambda i: word[i - 1])
    for i in order:
        t = phi_i(t, i)
    return t


def Psi_inv(t: IncBinaryTree | None) -> IncBinaryTree | None:
    if t is None:
        return None
    if not is_andre_tree(t, 2):
        raise DomainError("Psi_inv expects an André tree of the second kind")
    for i in two_child_positions(t):
        t = phi_i_inv(t, i)
    return t


def Phi(w) -> Permutation:
    """André permutations of the first kind to those of the second kind."""
    w = _as_word(w)
    if not is_andre(w, 1):
        raise DomainError(f"{w} is not an André permutation of the first kind")
    return Permutation(omega_inv(Psi(omega(w))))


def Phi_inv(w) -> Permutation:
    w = _as_word(w)
    if not is_andre(w, 2):
        raise DomainError(f"{w} is not an André permutation of the second kind")
    return Permutation(omega_inv(Psi_inv(omega(w))))
