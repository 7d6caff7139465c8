"""Substitution isomerism with permutation groups: orbit counts of tabloids,
genetic relations between derivative classes, and the inverse search for
symmetry groups matching observed isomer counts."""
from .genetic import (GeneticDigraph, IdentificationPartition, SubstitutionMove, dominance_leq,
                      genetic_digraph, identification_partition, identify, simple_moves)
from .groups import (ConjugacyWitness, CycleCensus, PermGroup, all_subgroups_up_to_conjugacy,
                     are_conjugate, closure, cycle_census, group_from_strings, is_transitive,
                     normalizer, preset, symmetric_group)
from .inverse import CountConstraint, SearchReport, SubgroupClass, corollary_report, solve
from .perm import CycleType, Permutation, compose, conjugate, cycle_type, inverse, parse_cycles
from .tabloids import (Orbit, OrbitSpace, Partition, Tabloid, act, burnside_count,
                       enumerate_tabloids, fixed_tabloid_count, orbit_space, partitions, shape,
                       verify_linear_system)

__version__ = "0.1.0"
