"""Normal forms, word metrics, and synchronous fellow-traveler divergence.

The package measures how far apart two normal-form paths drift when traced
with the same speed, for the integer lattices, Baumslag-Solitar groups
BS(p,q), and the plane lamplighter Z_2 wr Z^2, and provides the geometric
predicates (quasigeodesic, quasiregular, prefix-closed and quasiprefix-closed)
together with language transformations that trade those properties against
divergence growth.
"""

from .balls import (DEFAULT_BUDGET, BallBudgetError, BallIndex, GrowingBall,
                    OutOfBallError, bfs_ball)
from .baumslag import (BaumslagSolitar, Block, BSMetricConstants, BSNormalForm,
                       BSParams, BSParseError, BSSharpnessProbe, bs_metric_bounds,
                       bs_mul_gen, bs_normal_form_of, bs_parse,
                       bs_sharpness_family, bs_to_word, bs_validate,
                       calibrate_metric_constants)
from .bounds import GrowthModel, doubling_staircase, fit_bound, verify_coarse_leq
from .curves import (DivergenceCurve, curve_to_csv, divergence,
                     divergence_curve, read_curve_csv, write_curve_csv)
from .groups import AlphabetError, GroupModel, IntLattice, evaluate
from .lamplighter import (LampElement, LampSharpnessProbe, PlaneLamplighter,
                          lamp_invert, lamp_mul_gen, lamp_multiply,
                          lamp_normal_form, lamp_sharpness_family, spiral,
                          spiral_index)
from .loops import LoopCell, NotALoopError, loop_cells
from .predicates import NormalFormWitness, check_nf_property
from .providers import (NormalFormProvider, bs_provider, grid_lex_provider,
                        lamp_provider, patched, z_power_provider)
from .transforms import (CompletionError, CompletionRule, LoopBandError,
                         LoopChooser, quasiprefix_closure, repeat_loop_chooser,
                         searched_completion_rule, with_interleaved_loops,
                         with_loop_prefix)
from .words import (EMPTY_WORD, GenSymbol, Word, WordFormatError, format_word,
                    free_reduce, invert_word, parse_word, word_prefix)

__version__ = "0.1.0"
