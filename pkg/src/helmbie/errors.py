"""Exception hierarchy for the helmbie package."""


class HelmbieError(Exception):
    """Base class for all helmbie errors."""


# --- geometry ---------------------------------------------------------------
class ProfileError(HelmbieError):
    """Invalid boundary profile."""


class NonZeroEndpoints(ProfileError):
    """Profile height does not vanish at the support endpoints."""


class NonMonotoneX(ProfileError):
    """Breakpoint abscissae are not strictly increasing."""


class TooFewPoints(ProfileError):
    """Fewer than two breakpoints."""


class TooFewPanels(HelmbieError):
    """Mesh requested with fewer than four panels."""


class RadiusTooLarge(HelmbieError):
    """Corner-rounding radius does not fit the adjacent segments."""


# --- special functions ------------------------------------------------------
class NonPositiveArgument(HelmbieError):
    """Bessel argument outside the supported positive real range."""


class ZeroArgument(HelmbieError):
    """Hankel function evaluated at z = 0."""


class UnsupportedSector(HelmbieError):
    """Hankel argument outside the first-quadrant sector arg z in [0, pi/2]."""


# --- kernels ----------------------------------------------------------------
class CoincidentPoints(HelmbieError):
    """Kernel evaluated at coincident source/target (or target at the mirror image)."""


class SourceInsideDomain(HelmbieError):
    """Manufactured point source (or its mirror image) lies inside the domain."""


class InvalidWavenumber(HelmbieError):
    """Wavenumber violates Re k > 0, Im k >= 0."""


# --- bie solve --------------------------------------------------------------
class InvalidMesh(HelmbieError):
    """Mesh failed validation during operator assembly."""


class ExcitationMismatch(HelmbieError):
    """Excitation inconsistent with the boundary-condition kind or mesh size."""


class SingularSystem(HelmbieError):
    """Dense factorization failed or the system is numerically singular."""


# --- postprocess ------------------------------------------------------------
class PointTooCloseToBoundary(HelmbieError):
    """Field evaluation requested inside the guard band (or outside the domain)."""


class CornerNode(HelmbieError):
    """Jump check requested at a corner-adjacent node."""


class ConeViolation(HelmbieError):
    """Nontangential approach direction falls outside the admissible cone."""


class CircleOutsideDomain(HelmbieError):
    """Flux circle is not strictly inside the domain."""


class ComplexWavenumber(HelmbieError):
    """Far field requested for a wavenumber with nonzero imaginary part."""


# --- cli --------------------------------------------------------------------
class ConfigInvalid(HelmbieError):
    """Run configuration failed validation (message names the offending field)."""


class SolverFailure(HelmbieError):
    """Solver raised during an orchestrated run."""
