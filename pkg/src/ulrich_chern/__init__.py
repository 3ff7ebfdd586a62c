"""Exact Chern calculus for Ulrich bundles on quadrics and products of projective spaces."""
from .bundles import (
    BundleClass,
    CertificateError,
    chern_of_twisted_forms,
    direct_sum,
    dual,
    is_big,
    line_bundle,
    nu,
    segre,
    segre_dual,
    sum_big_certificate,
    trivial,
    twist,
    whitney_sum,
)
from .classifier import ClassificationRow, UlrichModel, classify_nonbig, line_criterion_forces_big
from .products import Atom, BoxBundle, DeductionRecord, bott_cohomology, is_ulrich_split
from .report import VerificationReport
from .ring import CohClass, MultiProjective, Quadric, hyperplane, integrate, restrict_to_linear
from .spinor import SpinorKind, spinor_chern, spinor_nu_table, ulrich_spinor

__version__ = "0.1.0"
