"""
Linear-time test of whether a tree has a 3-rs colouring.

The tree is rooted at a 3-plus vertex (degree at least three). Every maximal path hanging below a 3-plus vertex a, from
a down to the next 3-plus vertex or leaf v, is a "branch" of a. The rooted subtree at v falls into one of seven
classes (I..VII) and, together with the length of the path up to a (its up-distance), that fixes the branch class
(A..F). Branch classes at a in turn decide a's subtree class, bottom up. Class A branches and Class I subtrees admit
no 3-rs colouring; Class B forces a to colour 0, Classes C and D force a to colour 1.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from rscolour.colouring import Colouring
from rscolour.errors import InputError
from rscolour.graph import RootedTree, degree, is_tree, max_degree, root_at_3plus

log = logging.getLogger(__name__)

UNCOLOURED = -1


class BranchClass(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


class SubtreeClass(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"


_TABLE_COLUMNS = (SubtreeClass.II, SubtreeClass.III, SubtreeClass.IV, SubtreeClass.V, SubtreeClass.VI,
                  SubtreeClass.VII)

# up-distance 1..10 by rows; row 10 holds for every longer up-distance
_TABLE_ROWS = (
    "CABCEF",
    "DBEFFF",
    "BCDEFF",
    "EDFFFF",
    "DBEFFF",
    "FEFFFF",
    "EDFFFF",
    "FFFFFF",
    "FEFFFF",
    "FFFFFF",
)

BRANCH_TABLE = {
    (subtree, row + 1): BranchClass(letters[col])
    for row, letters in enumerate(_TABLE_ROWS)
    for col, subtree in enumerate(_TABLE_COLUMNS)
}

SATURATION_DISTANCE = len(_TABLE_ROWS)


@dataclass
class TraversalState:
    """
    Per-vertex bookkeeping of one run: forced colour (0, 1 or UNCOLOURED), distance up to the nearest 3-plus
    ancestor, and how many Class C and Class E branches hang below each 3-plus vertex.
    """
    colour: List[int]
    up_distance: List[int]
    c_count: List[int]
    e_count: List[int]

    @classmethod
    def fresh(cls, n):
        return cls([UNCOLOURED] * n, [0] * n, [0] * n, [0] * n)


@dataclass(frozen=True)
class TreeVerdict:
    """
    `reason` is None for colourable trees, otherwise "class_a_branch", "class_i_subtree" or "colour_conflict";
    `vertex` is where the problem was found. `visited` counts the vertices the traversal touched.
    """
    colourable: bool
    reason: Optional[str] = None
    vertex: Optional[int] = None
    visited: int = 0
    subtree_classes: dict = field(default_factory=dict, compare=False, repr=False)

    def describe(self, label=str):
        """
        :param label: Renders a vertex id for people (the command line passes 1-based numbering)
        """
        if self.colourable:
            return "3-rs colourable"
        return {
            "class_a_branch": "class A branch at vertex %s",
            "class_i_subtree": "class I subtree at %s",
            "colour_conflict": "colour conflict at %s",
        }[self.reason] % label(self.vertex)


def path_3rs_feasible(n, i, j):
    """
    Can the path on n vertices be 3-rs coloured with one end coloured i and the other coloured j?

    :param n: Number of vertices, at least 2
    :param i: Colour of the first end, 0 or 1
    :param j: Colour of the last end, 0 or 1
    """
    if n < 2:
        raise InputError("a path needs at least two vertices, got %r" % (n,))
    if i not in (0, 1) or j not in (0, 1):
        raise InputError("end colours must be 0 or 1")
    if n == 2:
        return i != j
    if n == 3 or n == 6:
        return not (i == 0 and j == 0)
    if n == 4:
        return i == j
    return True


def branch_class_lookup(subtree, up_distance):
    """
    :param subtree: The SubtreeClass at the lower end of the branch
    :param up_distance: Length of the branch path, at least 1
    :return: The BranchClass
    """
    if up_distance < 1:
        raise InputError("up-distance must be at least 1, got %r" % (up_distance,))
    if subtree is SubtreeClass.I:
        return BranchClass.A
    return BRANCH_TABLE[(subtree, min(up_distance, SATURATION_DISTANCE))]


def subtree_class_from_state(colour_v, c_count, e_count, is_leaf):
    """
    Classifies the rooted subtree at v once all of v's branches are in.

    :param colour_v: 0, 1 or UNCOLOURED; a colour comes from a Class B (0) or Class C/D (1) branch
    :param c_count: Number of Class C branches at v
    :param e_count: Number of Class E branches at v
    :param is_leaf: Whether v is a leaf
    :return: The SubtreeClass; Class I means the tree has no 3-rs colouring
    """
    if colour_v == 0:
        return SubtreeClass.II
    if colour_v == 1:
        return {0: SubtreeClass.IV, 1: SubtreeClass.III}.get(c_count + e_count, SubtreeClass.I)
    if is_leaf:
        return SubtreeClass.VII
    return {0: SubtreeClass.VI, 1: SubtreeClass.V}.get(e_count, SubtreeClass.II)


def try_to_colour(state, v, col):
    """
    :return: True when v is (now) coloured col, False on a conflict with an earlier forced colour
    """
    if state.colour[v] == UNCOLOURED:
        state.colour[v] = col
        return True
    return state.colour[v] == col


def _as_rooted(t):
    if isinstance(t, RootedTree):
        return t
    if not is_tree(t):
        raise InputError("graph is not a tree")
    if not any(degree(t, v) >= 3 for v in t.vertices()):
        return None
    return root_at_3plus(t)


def test_3rs_tree(t):
    """
    Decides 3-rs colourability of a tree in one bottom-up pass.

    :param t: A RootedTree (rooted at a 3-plus vertex) or a tree as a Graph
    :return: A TreeVerdict
    """
    rooted = _as_rooted(t)
    if rooted is None:
        n = t.n
        log.debug("tree on %d vertices is a path", n)
        return TreeVerdict(True, visited=n)

    n = rooted.underlying.n
    state = TraversalState.fresh(n)
    anchor = [None] * n
    children = rooted.children

    def three_plus(v):
        return v == rooted.root or len(children[v]) >= 2

    for v in rooted.order:
        for w in children[v]:
            if three_plus(v):
                anchor[w] = v
                state.up_distance[w] = 1
            else:
                anchor[w] = anchor[v]
                state.up_distance[w] = state.up_distance[v] + 1

    classes = {}
    visited = 0
    for v in reversed(rooted.order):
        visited += 1
        if children[v] and not three_plus(v):
            continue
        subtree = subtree_class_from_state(state.colour[v], state.c_count[v], state.e_count[v], not children[v])
        classes[v] = subtree
        if subtree is SubtreeClass.I:
            log.debug("class I subtree at %d", v)
            return TreeVerdict(False, "class_i_subtree", v, visited, classes)
        if v == rooted.root:
            break

        a = anchor[v]
        branch = branch_class_lookup(subtree, state.up_distance[v])
        if branch is BranchClass.A:
            log.debug("class A branch from %d up to %d", v, a)
            return TreeVerdict(False, "class_a_branch", a, visited, classes)
        if branch is BranchClass.B:
            ok = try_to_colour(state, a, 0)
        elif branch in (BranchClass.C, BranchClass.D):
            ok = try_to_colour(state, a, 1)
            if branch is BranchClass.C:
                state.c_count[a] += 1
        else:
            ok = True
            if branch is BranchClass.E:
                state.e_count[a] += 1
        if not ok:
            log.debug("colour conflict at %d", a)
            return TreeVerdict(False, "colour_conflict", a, visited, classes)

    return TreeVerdict(True, None, None, visited, classes)


test_3rs_tree.__test__ = False


def tree_distance_two_colouring(t):
    """
    Colours a tree with max_degree + 1 colours so that vertices at distance at most two differ, by BFS from vertex 0.
    Every such colouring is an rs colouring.

    :param t: A tree as a Graph
    :return: The Colouring
    """
    g = t.underlying if isinstance(t, RootedTree) else t
    if not is_tree(g):
        raise InputError("graph is not a tree")
    k = max_degree(g) + 1
    colour = [UNCOLOURED] * g.n
    parent = [None] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        taken = {colour[v]}
        if parent[v] is not None:
            taken.add(colour[parent[v]])
        free = (c for c in range(k) if c not in taken)
        for w in g.neighbours(v):
            if w == parent[v]:
                continue
            parent[w] = v
            colour[w] = next(free)
            queue.append(w)
    return Colouring(tuple(colour), k)
