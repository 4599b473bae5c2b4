"""Entropoid algebra, non-associative power indices, key exchange and signatures."""

from .algebra import (Element, EntropoidParams, box_add, box_neg, box_sub, check_entropic,
                      decode_element, encode_element, inv_star, is_unit_member, params_new,
                      sqrt_units, star)
from .backend import available as available_backends
from .backend import default_name as default_backend
from .field import PrimeModulus, gen_safe_prime, is_safe_prime, mod_inv, rand_field_element
from .generators import GeneratorCertificate, Parity, gen, gen_q, parity_test, span, span2
from .powindex import (PowerIndex, b_max, catalan, equivalence_classes, narayana, op_count,
                       pow_fast, pow_oracle, random_index, representatives)
from .presets import preset

__all__ = [
    "Element", "EntropoidParams", "box_add", "box_neg", "box_sub", "check_entropic",
    "decode_element", "encode_element", "inv_star", "is_unit_member", "params_new",
    "sqrt_units", "star", "available_backends", "default_backend", "PrimeModulus",
    "gen_safe_prime", "is_safe_prime", "mod_inv", "rand_field_element",
    "GeneratorCertificate", "Parity", "gen", "gen_q", "parity_test", "span", "span2",
    "PowerIndex", "b_max", "catalan", "equivalence_classes", "narayana", "op_count",
    "pow_fast", "pow_oracle", "random_index", "representatives", "preset",
]
