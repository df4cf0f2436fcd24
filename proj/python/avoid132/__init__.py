"""Python access to the avoid132 C++ core."""

import json

from ._core import (  # noqa: F401
    ResourceLimitError,
    avoids_132,
    binomial,
    bounded_compositions,
    catalan,
    claim_ids,
    count_bounded_ir,
    count_bounded_runs,
    count_consec_pattern,
    count_start_descents,
    count_start_end_descents,
    decompose,
    enumerate_avoiders,
    enumerate_trees,
    gen_narayana,
    jr_perm_to_tree,
    jr_tree_to_perm,
    kappa,
    length_distribution,
    level_switch,
    mirror,
    narayana,
    phi_perm_to_tree,
    phi_tree_to_perm,
)
from . import _core


def tree_stats(word):
    """Statistics of the plane tree given by a parenthesis word, as a dict."""
    return json.loads(_core.tree_stats_json(word))


def verify(claim, max_n, shards=1):
    """Run an exhaustive verification and return the report as a dict."""
    return json.loads(_core.verify_payload(claim, max_n, shards))
