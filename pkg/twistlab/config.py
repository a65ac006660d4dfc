import dataclasses
import logging
import os

from .exceptions import InvalidConfig

LOGGER = logging.getLogger(__name__)

FORMATS = ("json", "csv", "table")
FORMAT_ENV_VAR = "TWISTLAB_FORMAT"


@dataclasses.dataclass(frozen=True)
class RunConfig:
    r"""
    Tolerances, grid sizes and output format of one command line run.

    The library functions take the same values as keyword arguments with the same
    defaults, so a RunConfig is only needed to thread one consistent set through a
    batch of calls.

    Attributes:
        symplectic_tol (float): bound on :math:`\|M^T J_0 M - J_0\|_{max}` for samples.
        det_tol (float): crossing detection threshold on :math:`|\det(\psi(t)-\mathrm{Id})|`.
        kernel_tol (float): singular value threshold for kernels and crossing-form rank.
        refine_iters (int): bisection / golden-section iterations per crossing.
        residual_tol (float): tolerance applied to the twisting-profile residual.
        exactness_tol (float): tolerance applied to the exactness-identity residual.
        path_samples (int): grid intervals of model paths.
        profile_grid (int): grid size of profile tables.
        exactness_grid (int): nodes of the [0, 1] grid of the exactness check.
        window (int): window of the partial-average :math:`\chi_m` estimator.
        output_format (str): one of ``json``, ``csv``, ``table``.
    """

    symplectic_tol: float = 1e-9
    det_tol: float = 1e-10
    kernel_tol: float = 1e-8
    refine_iters: int = 60
    residual_tol: float = 1e-8
    exactness_tol: float = 1e-6
    path_samples: int = 256
    profile_grid: int = 10001
    exactness_grid: int = 40001
    window: int = 2000
    output_format: str = "json"

    def validate(self):
        for name in (
            "symplectic_tol",
            "det_tol",
            "kernel_tol",
            "residual_tol",
            "exactness_tol",
        ):
            if not getattr(self, name) > 0:
                raise InvalidConfig(f"{name} must be positive", **{name: getattr(self, name)})
        for name in ("refine_iters", "path_samples", "profile_grid", "exactness_grid", "window"):
            if getattr(self, name) < 1:
                raise InvalidConfig(f"{name} must be positive", **{name: getattr(self, name)})
        if self.output_format not in FORMATS:
            raise InvalidConfig(
                f"output format must be one of {', '.join(FORMATS)}",
                output_format=self.output_format,
            )
        return self

    @classmethod
    def from_env(cls, environ=None, **overrides):
        r"""Build a validated config from keyword overrides and the environment.

        ``TWISTLAB_FORMAT`` wins over an ``output_format`` override. overrides that are
        ``None`` are ignored, so argparse namespaces can be passed through directly.
        """
        environ = os.environ if environ is None else environ
        values = {k: v for k, v in overrides.items() if v is not None}
        env_format = environ.get(FORMAT_ENV_VAR)
        if env_format:
            LOGGER.debug("output format %r taken from %s", env_format, FORMAT_ENV_VAR)
            values["output_format"] = env_format.strip().lower()
        return cls(**values).validate()
