from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Sequence, Set

from pysurgflow.errors import WorkflowInputError
from pysurgflow.ranking.rank import MethodRanking


class StabilityVerdict(NamedTuple):
    """Whether a ranking survives a change of ranking method.

    tie_groups lists, for an unstable ranking, the groups of teams whose
    relative order depends on the method.
    """

    tie_groups: List[List[str]]

    @property
    def stable(self) -> bool:
        return len(self.tie_groups) == 0

    def __str__(self) -> str:
        if self.stable:
            return "stable"
        return "tie: " + "; ".join(
            "{" + ", ".join(group) + "}" for group in self.tie_groups
        )


def _order(ranks: Dict[str, int], a: str, b: str) -> int:
    return (ranks[a] > ranks[b]) - (ranks[a] < ranks[b])


def stability(
    rankings: Sequence[MethodRanking], teams: Iterable[str] = None
) -> StabilityVerdict:
    """Compare the rankings produced by several methods.

    Two teams are linked when their relative order (ahead, tied, behind)
    differs between two methods; the tie groups are the connected groups of
    linked teams. The ranking is stable iff every team holds the same rank
    under every method.

    Args:
        rankings: One MethodRanking per method, over the same teams.
        teams (optional): Restrict the verdict to these teams, e.g. the
            competing ones. Defaults to all ranked teams.

    Raises:
        WorkflowInputError: if no ranking is given or rankings cover different teams.
    """
    if len(rankings) == 0:
        raise WorkflowInputError("Cannot assess stability without any ranking")
    ranked = set(rankings[0].ranks)
    if any(set(r.ranks) != ranked for r in rankings):
        raise WorkflowInputError("Rankings do not cover the same teams")

    selected = sorted(ranked if teams is None else set(teams) & ranked)

    neighbours: Dict[str, Set[str]] = {team: set() for team in selected}
    for a, b in combinations(selected, 2):
        orders = {_order(r.ranks, a, b) for r in rankings}
        if len(orders) > 1:
            neighbours[a].add(b)
            neighbours[b].add(a)

    groups: List[List[str]] = []
    seen: Set[str] = set()
    for team in selected:
        if team in seen or len(neighbours[team]) == 0:
            continue
        group: Set[str] = set()
        stack = [team]
        while len(stack) != 0:
            current = stack.pop()
            if current in group:
                continue
            group.add(current)
            stack += neighbours[current]
        seen |= group
        groups.append(sorted(group))

    return StabilityVerdict(groups)
