"""Combinatorial engine for sectional homogeneity of colorings.

Decides, searches, transports and certifies witness colorings for the
non-sectional-homogeneity property of block layouts, bridges it to
Hales-Jewett style line search, and runs the constructive certificate
pipeline for sequences whose first block has size two.
"""

from .coloring import (Coloring, OracleColoring, SHCertificate, TableColoring,
                       find_sh_certificate, monochromatic_color,
                       verify_sh_certificate)
from .decide import (CnfInstance, EnshDecision, ExhaustionReport, NoWitness,
                     UnsatReport, Witness, decide_ensh, decide_ensh_brute,
                     decode_model, encode_cnf, known_witness)
from .words import (Point, SectionLayout, VariableWord,
                    count_section_words, enumerate_section_words,
                    first_occurrences, is_section_word, occurrences,
                    rank_point, substitute_total, substitute_truncating,
                    unrank_point)

__version__ = "0.1.0"
