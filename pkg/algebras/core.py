"""Metric solvable Lie algebras g = RA + n in an orthonormal basis.

Index 0 is A; indices 1..n-1 span the nilradical n. Structure constants are
c[i, j, k] with [e_i, e_j] = sum_k c[i, j, k] e_k.
"""
import inspect
import json
import logging
from functools import cached_property
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Optional

import jsonschema
import numpy as np
import scipy.linalg

from config import DEFAULT_SETTINGS
from config import Settings
from core import AlgebraSpecError
from core import AntisymmetryViolation
from core import DNotSymmetricPositive
from core import GeometryObject
from core import JacobiViolation
from core import NotNilpotentIdeal

SpecRegistry = {}

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schema" / "algebra_spec.json"

logger = logging.getLogger(__name__)


def make_spec(kind, *args, **kwargs):
    if kind not in SpecRegistry:
        raise ValueError(f"Algebra kind `{kind}` not found.")
    return SpecRegistry[kind](*args, **kwargs)


def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r") as infile:
        return json.load(infile)


def validate_document(doc: Dict[str, Any]) -> None:
    validator = jsonschema.Draft7Validator(load_schema())
    error = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if error is not None:
        where = "/".join(str(p) for p in error.absolute_path) or "<root>"
        raise AlgebraSpecError(f"schema violation at {where}: {error.message}")


class MetricSolvableAlgebra(GeometryObject):
    def __init__(
        self,
        structure_constants: np.ndarray,
        rational_constants: Optional[np.ndarray] = None,
        label: str = "",
        validate: bool = True,
        settings: Settings = DEFAULT_SETTINGS,
    ) -> None:
        """
        Description: wraps structure constants and, unless validate is False,
        checks every invariant eagerly

        Args:
            structure_constants (np.ndarray): (n, n, n) array c[i, j, k]
            rational_constants (np.ndarray): same shape, dtype object of Fractions,
                when the document gave every entry exactly
            label (str): free text carried into reports
            validate (bool): run the structural checks
            settings (Settings): tolerances

        Returns:
            None
        """
        c = np.asarray(structure_constants, dtype=np.float64)
        if c.ndim != 3 or len(set(c.shape)) != 1 or c.shape[0] < 1:
            self.throw(ValueError, f"structure constants must be (n, n, n), got {c.shape}")
        self.structure_constants = c
        self.dim = c.shape[0]
        if validate:
            self.check_antisymmetry()
            self.check_ideal()
            self.check_jacobi()
            self.check_derivation()
            self.nilpotency_step
            logger.info("built %s: dim %d, nilpotency step %d", label or "algebra", self.dim, self.nilpotency_step)

    @property
    def c(self) -> np.ndarray:
        return self.structure_constants

    @property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self.c)))) if self.c.size else 1.0

    @property
    def D(self) -> np.ndarray:
        """ad_A restricted to n, as a matrix acting on column vectors"""
        return self.c[0, 1:, 1:].T.copy()

    def ad(self, i: int) -> np.ndarray:
        return self.c[i].T.copy()

    def bracket(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", X, Y, self.c)

    def j_operator(self, Z: np.ndarray) -> np.ndarray:
        """Matrix of J_Z on g: <J_Z U, V> = <Z, [U, V]>"""
        return np.einsum("k,uvk->vu", Z, self.c)

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e

    @property
    def is_flat_model(self) -> bool:
        return not np.any(self.c)

    def scaled(self, factor: float) -> "MetricSolvableAlgebra":
        """Same algebra with every bracket multiplied by factor (curvature scales by factor^2)"""
        return MetricSolvableAlgebra(self.c * factor, label=f"{self.label} x{factor}", settings=self.settings)

    def check_antisymmetry(self) -> None:
        defect = np.abs(self.c + self.c.transpose(1, 0, 2))
        if defect.size and defect.max() > self.settings.algebra_tol * self.scale:
            i, j, k = np.unravel_index(np.argmax(defect), defect.shape)
            self.throw(AntisymmetryViolation, f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")

    def check_ideal(self) -> None:
        along_a = np.abs(self.c[:, :, 0])
        if along_a.size and along_a.max() > self.settings.algebra_tol * self.scale:
            i, j = np.unravel_index(np.argmax(along_a), along_a.shape)
            self.throw(NotNilpotentIdeal, f"[e_{i}, e_{j}] has a component along A, so n is not an ideal containing [g, g]")

    def check_jacobi(self) -> None:
        c = self.c
        # J[i, j, k, l] = <[[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j], e_l>
        first = np.einsum("ijm,mkl->ijkl", c, c)
        jac = first + first.transpose(1, 2, 0, 3) + first.transpose(2, 0, 1, 3)
        defect = np.abs(jac).max(axis=3) if jac.size else jac
        if defect.size and defect.max() > self.settings.algebra_tol * self.scale ** 2:
            i, j, k = np.unravel_index(np.argmax(defect), defect.shape)
            self.throw(JacobiViolation, f"Jacobi identity fails on (e_{i}, e_{j}, e_{k}) by {defect[i, j, k]:.3e}")

    def check_derivation(self) -> None:
        D = self.D
        tol = self.settings.algebra_tol * self.scale
        asym = np.abs(D - D.T)
        if asym.size and asym.max() > tol:
            i, j = np.unravel_index(np.argmax(asym), asym.shape)
            self.throw(DNotSymmetricPositive, f"D is not symmetric at ({i + 1}, {j + 1})")
        if self.is_flat_model or D.size == 0:
            return
        if not np.any(D):
            self.throw(DNotSymmetricPositive, "ad_A vanishes on n but n is not abelian")
        eigvals, eigvecs = scipy.linalg.eigh(0.5 * (D + D.T))
        floor = self.settings.cluster_rtol * max(abs(eigvals[-1]), 1.0)
        if eigvals[0] <= floor:
            index = int(np.argmax(np.abs(eigvecs[:, 0]))) + 1
            self.throw(
                DNotSymmetricPositive,
                f"D has eigenvalue {eigvals[0]:.6g} <= 0 (eigenvector concentrated on e_{index})",
            )

    @cached_property
    def nilpotency_step(self) -> int:
        """Length of the lower central series of n; 1 for abelian n"""
        inner = self.c[1:, 1:, 1:]
        m = inner.shape[0]
        basis = np.eye(m)
        step = 0
        while basis.shape[1] > 0:
            step += 1
            if step > m + 1:
                self.throw(NotNilpotentIdeal, "lower central series of n does not terminate")
            images = np.einsum("ijk,jb->kib", inner, basis).reshape(m, -1)
            if not np.any(np.abs(images) > self.settings.algebra_tol * self.scale):
                break
            nxt = scipy.linalg.orth(images, rcond=self.settings.cluster_rtol)
            if nxt.shape[1] >= basis.shape[1]:
                self.throw(NotNilpotentIdeal, f"[n, C^{step}] does not shrink (dimension {nxt.shape[1]})")
            basis = nxt
        return step


class AlgebraSpec(GeometryObject):
    """Declarative input document; subclasses register under their `kind`"""

    kind = None

    @classmethod
    def __init_subclass__(cls, *args, **kwargs):
        super().__init_subclass__(*args, **kwargs)
        if cls.kind is not None and cls.kind not in SpecRegistry and not inspect.isabstract(cls):
            SpecRegistry[cls.kind] = cls

    def build(self, settings: Settings = DEFAULT_SETTINGS) -> MetricSolvableAlgebra:
        self.throw(NotImplementedError, "build not implemented")

    def to_json(self) -> Dict[str, Any]:
        doc = {"kind": self.kind}
        for key, val in list(self.arguments_.arguments.items())[1:]:
            doc["lambda" if key == "lam" else key] = val
        return doc


def build_from_spec(spec, settings: Settings = DEFAULT_SETTINGS) -> MetricSolvableAlgebra:
    """
    Description: document (or AlgebraSpec) -> validated MetricSolvableAlgebra

    Args:
        spec (dict | AlgebraSpec): a document with a "kind" discriminator, or a spec object
        settings (Settings): tolerances

    Returns:
        MetricSolvableAlgebra

    Raises:
        AlgebraSpecError: schema violations
        AlgebraError: structural rejections, naming the failing index or triple
    """
    if isinstance(spec, AlgebraSpec):
        return spec.build(settings)
    if not isinstance(spec, dict):
        raise AlgebraSpecError(f"an AlgebraSpec document must be a JSON object, got {type(spec).__name__}")
    validate_document(spec)
    # `lambda` is a Python keyword; specs take it as `lam`
    fields = {("lam" if key == "lambda" else key): val for key, val in spec.items() if key not in ("kind", "$schema", "comment")}
    return make_spec(spec["kind"], **fields).build(settings)
