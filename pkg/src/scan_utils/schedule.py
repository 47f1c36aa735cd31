import logging

from mesa.time import BaseScheduler

from errors import InvalidParameters
from params_core import iter_hexagonal, iter_sextuples

logger = logging.getLogger(__name__)


class SextupleSchedule(BaseScheduler):
    '''
    A scheduler which holds the sextuples of one triple sum at a time and
    activates them in the order they were added, which is lexicographic.
    Triple sums are visited in increasing order, one per step. Unlike a
    random activation the order never changes, so two scans with the same
    bounds produce the same rows.
    Assumes that all agents have a step() method.
    '''

    def __init__(self, model, min_s_plus_2, max_s_plus_2, hexagonal_only=False):
        if min_s_plus_2 > max_s_plus_2:
            raise InvalidParameters(f"empty scan range {min_s_plus_2}..{max_s_plus_2}")
        super().__init__(model)
        self.min_s_plus_2 = min_s_plus_2
        self.max_s_plus_2 = max_s_plus_2
        self.hexagonal_only = hexagonal_only

    @property
    def triple_sums(self):
        if self.hexagonal_only:
            return [3 * s2 for s2 in range(self.min_s_plus_2, self.max_s_plus_2 + 1)]
        return list(range(3 * self.min_s_plus_2, 3 * self.max_s_plus_2 + 1))

    @property
    def current_sum(self):
        '''
        Returns the triple sum of the next step, or None when the range is exhausted.
        '''
        sums = self.triple_sums
        return sums[self.steps] if self.steps < len(sums) else None

    def batch(self, triple_sum):
        '''
        Returns the sextuples of one triple sum, in lexicographic order.
        '''
        if self.hexagonal_only:
            if triple_sum % 3:
                return []
            return list(iter_hexagonal(triple_sum // 3))
        return list(iter_sextuples(triple_sum))

    def step(self):
        '''
        Activates every loaded agent once, in insertion order, then releases
        them and moves on to the next triple sum.
        '''
        agents = list(self.agents)
        for agent in agents:
            agent.step()
        for agent in agents:
            self.remove(agent)
        logger.debug("scan step %d: triple sum %s, %d sextuples", self.steps, self.current_sum, len(agents))
        self.steps += 1
        self.time += 1

    def __iter__(self):
        for triple_sum in self.triple_sums:
            yield from self.batch(triple_sum)


def partition(items, workers):
    '''
    Splits a batch round robin into one share per worker; share w holds the
    items whose position is congruent to w modulo workers.
    '''
    return [items[w::workers] for w in range(workers)]


def merge(shares):
    '''
    Inverse of `partition`: restores the original order of the items.
    '''
    merged = []
    longest = max((len(share) for share in shares), default=0)
    for i in range(longest):
        for share in shares:
            if i < len(share):
                merged.append(share[i])
    return merged
