#  License: Apache Software License 2.0

"""Reference implementations used to verify the library: random models, exhaustive search and identity checks."""

from .exhaustive import EXHAUSTIVE_LIMIT, exhaustive_minimal_symptom_set, exhaustive_optimal_tree
from .generation import SIMPLEX_FLOOR, InstanceSpec, PriorDistribution, generate_instance
from .identities import IDENTITIES, IdentityCheck, VerificationReport, check_corpus, check_identities
