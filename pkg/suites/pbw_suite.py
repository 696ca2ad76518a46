import random
from typing import List

from scalars import q_pow
from pbw_algebra import (
    AlgebraElement,
    associativity_difference,
    closed_form_difference,
    confluence_witness,
    pbw_violations,
    random_element,
    random_strategy,
    random_word,
    relation_differences,
    strategy_difference,
    words_up_to,
)
from reports import CheckResult, run_check, run_control, run_difference_checks

from .base_suite import BaseSuite, Task, single

CONFLUENCE_LENGTH = 4
RANDOM_WORD_LENGTH = 6


def _word_label(letters) -> str:
    return "".join(letters) or "1"


def _confluence_checks(length: int) -> List[CheckResult]:
    words = [letters for letters in words_up_to(length) if len(letters) == length]

    def witness():
        failures = []
        for letters in words:
            forms = confluence_witness(letters)
            if forms:
                failures.append(f"{_word_label(letters)} -> {' | '.join(forms)}")
            difference = closed_form_difference(letters)
            if difference:
                failures.append(f"{_word_label(letters)} closed form differs by {difference}")
        return failures

    return [run_check(f"confluence-length-{length}", witness)]


def _random_word_checks(seed: int, count: int) -> List[CheckResult]:
    rng = random.Random(seed)
    checks = []
    for i in range(count):
        letters = random_word(rng, RANDOM_WORD_LENGTH, min_length=2)
        strategy = random_strategy(seed + i)
        checks.append(
            run_check(
                f"strategy-{i}-{_word_label(letters)}",
                lambda letters=letters, strategy=strategy: strategy_difference(letters, strategy),
            )
        )
    return checks


def _associativity_checks(seed: int, count: int, max_degree: int) -> List[CheckResult]:
    rng = random.Random(seed + 1)
    checks = []
    for i in range(count):
        x, y, z = (random_element(rng, max_degree) for _ in range(3))
        checks.append(run_check(f"associativity-{i}", lambda x=x, y=y, z=z: associativity_difference(x, y, z)))
        checks.append(run_check(f"pbw-basis-{i}", lambda x=x, y=y, z=z: pbw_violations(x * y * z)))
    return checks


class PbwSuite(BaseSuite):
    name = "pbw"
    description = "Confluence of the rewriting system, agreement with the closed-form product and associativity"

    def tasks(self, p, settings) -> List[Task]:
        tasks = [lambda: run_difference_checks(relation_differences)]
        tasks += [lambda length=length: _confluence_checks(length) for length in range(CONFLUENCE_LENGTH + 1)]
        tasks.append(lambda: _random_word_checks(settings.seed, 2 * settings.samples))
        tasks.append(lambda: _associativity_checks(settings.seed, settings.samples, settings.degree_cap))
        return tasks

    def controls(self, p, settings) -> List[Task]:
        a, b, c, d = (AlgebraElement.generator(name) for name in "abcd")
        # ad = 1 + q^-1 bc is the da relation, not the ad one
        return [single(lambda: run_control("relation-ad-wrong-power", lambda: a * d - b * c * q_pow(-1) - 1))]
