"""Residue-current annihilators of monomial ideals from Newton polyhedra."""

from .currents import (PairingValue, TensorCurrent, annihilates_term,
                       annihilator_membership_oracle, pair_monomial)
from .errors import (DimensionMismatch, LatticeOverflowError, MonomialError,
                     NotArtinianError, ParseError, UnitIdealError,
                     ZeroIdealError)
from .general import (PartialAnnihilatorReport, ProjectedTerm,
                      enumerate_projected_terms, partial_annihilator,
                      project_exponents)
from .ideals import (MonomialIdeal, Polynomial, contains, divides, intersect,
                     is_complete_intersection, minimalize, power,
                     variety_codimension, variety_is_origin)
from .newton import (Facet, NewtonPolyhedron, compact_facets,
                     compute_newton_polyhedron, integral_closure,
                     integral_closure_of_power, membership_in_scaled)
from .parsing import IdealSource, parse_ideal, render_source
from .residue import (AnnihilatorReport, EssentialSet, ResidueTerm, annihilator,
                      briancon_skoda_witness, enumerate_essential_sets,
                      verify_chain)
from .staircase import StaircasePicture, render_staircase

__version__ = "0.1.0"
