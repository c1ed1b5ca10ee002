"""
From a measure to its carrier set, step by step
===============================================

The norm computation behind every verdict reduces to set arithmetic:
split the measure into even and odd halves, Jordan-decompose the odd
half, and intersect the positive carrier with the reflected negative
one. The resulting set V holds exactly half the variation, and its
reflection holds the other half.
"""

from imchar import catalog
from imchar.decompose import hahn_jordan, sym_anti_split, v_set_certificate
from imchar.measures import measure_of, total_variation
from imchar.wire import set_to_obj

m = catalog.make_measure(catalog.spec("uniform", a=-1.0, b=3.0))

split = sym_anti_split(m)
eta = split.antisymmetric_part
print("total variation of the odd part:", total_variation(eta))

jp = hahn_jordan(eta)
print("positive part mass:", total_variation(jp.positive_part))
print("negative part mass:", total_variation(jp.negative_part))

cert = v_set_certificate(eta)
print("\nV as intervals:", set_to_obj(cert.v_set)["intervals"])
print("V disjoint from -V:", cert.disjointness_ok)
print("masses (eta+(V), |eta+|, |eta-|, eta-(-V)):", cert.masses)

# the identity behind the certificate, spelled out on one test set:
# restricted to V the measure is purely positive
probe = cert.v_set
print("\neta on V:      ", measure_of(eta, probe))
print("eta on -V:     ", measure_of(eta, probe.negate()))
print("eta+ on whole:", measure_of(jp.positive_part, probe))
