"""traagkit: rewriting systems for groups presented by mixed graphs.

Vertices generate the group; an undirected edge {a, b} imposes ab = ba and a
directed edge a -> b imposes the Klein relation aba = b.  The package builds
the shortlex rewriting system of such a presentation, completes it, and uses
the resulting normal forms to decide the word problem and to compute growth,
geodesic lengths, torsion, abelianization, and homomorphism certificates.
"""

__version__ = "0.1.0"

from .analysis import (
    AbelianizationResult,
    GeneratorMap,
    TorsionWitness,
    abelianization,
    apply_map,
    check_hom,
    geodesic_length,
    indicable_vertex,
    mutually_inverse,
    parse_map,
    support,
    torsion,
)
from .errors import (
    GraphParseError,
    IncompleteSystemError,
    MapParseError,
    ParseError,
    WordParseError,
)
from .graphs import (
    MixedGraph,
    clique_directed_cycle,
    is_clique,
    parse_graph,
    underlying,
)
from .growth import (
    CayleyBall,
    CorrespondenceCheck,
    GrowthComparison,
    GrowthTable,
    cayley_ball,
    cayley_dot,
    check_cayley_correspondence,
    compare_with_underlying,
    growth_table,
    underlying_presentation,
    untwist,
)
from .presentations import (
    Presentation,
    complete,
    normal_form,
    presentation,
    relators,
    rule_shape,
    rule_shape_report,
    shuffle_left,
    word_problem,
)
from .rewriting import (
    BUDGET_EXHAUSTED,
    FINITE,
    Completion,
    CriticalPair,
    RewriteSystem,
    Rule,
    critical_pairs,
    is_locally_confluent,
    knuth_bendix,
    reduce_rightmost,
)
from .words import (
    AlphabetOrder,
    free_reduce,
    format_word,
    from_syllables,
    invert,
    letter,
    parse_word,
    sign_of,
    to_syllables,
    vertex_of,
)
