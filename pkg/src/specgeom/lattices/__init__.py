"""Exact lattice and quadratic-form engine for flat-torus spectra."""

from specgeom.lattices.decompose import Decomposition, GeneratingSetError, orthogonal_decompose
from specgeom.lattices.forms import (
    GramMatrix,
    LatticeBasis,
    LatticeError,
    NotPositiveDefiniteError,
    RankError,
    dual_basis,
    gram_of_basis,
    is_even,
    level,
    mu0,
)
from specgeom.lattices.io import (
    LatticeFileError,
    as_gram,
    dump_lattice,
    lattice_to_json,
    load_form,
    load_lattice,
    parse_form,
    parse_lattice,
)
from specgeom.lattices.milnor import e8_basis, e8xe8_basis, e16_basis, in_e_lattice, milnor_basis
from specgeom.lattices.spectra import (
    CertificateReport,
    RepresentationTable,
    TorusSpectrum,
    certificate_isospectral,
    representation_number,
    representation_table,
    torus_spectrum,
)

__all__ = [
    "CertificateReport",
    "Decomposition",
    "GeneratingSetError",
    "GramMatrix",
    "LatticeBasis",
    "LatticeError",
    "LatticeFileError",
    "NotPositiveDefiniteError",
    "RankError",
    "RepresentationTable",
    "as_gram",
    "TorusSpectrum",
    "certificate_isospectral",
    "dual_basis",
    "dump_lattice",
    "e16_basis",
    "e8_basis",
    "e8xe8_basis",
    "gram_of_basis",
    "in_e_lattice",
    "is_even",
    "lattice_to_json",
    "level",
    "load_form",
    "load_lattice",
    "milnor_basis",
    "mu0",
    "orthogonal_decompose",
    "parse_form",
    "parse_lattice",
    "representation_number",
    "representation_table",
    "torus_spectrum",
]
