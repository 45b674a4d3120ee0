use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter violates its domain (non-finite, non-positive, q ∉ (0,1), ...).
    InvalidInput(&'static str),
    /// Energy outside the scattering domain of the requested computation.
    InvalidEnergy(f64),
    /// Energy sits exactly on a case boundary (E = V0) where the formulas are singular.
    DegenerateEnergy(f64),
    /// Energy belongs to the other case of a piecewise solution.
    WrongCase(&'static str),
    /// A delta potential has no pointwise value.
    UnsupportedPointwise,
    /// A gamma or hypergeometric argument hit a pole.
    Pole,
    /// The hypergeometric series did not converge.
    NonConvergence { terms: usize, last_term: f64 },
    /// The potential dips below the energy inside a WKB region.
    InvalidRegion { x: f64 },
    /// Adaptive quadrature ran out of depth before reaching tolerance.
    Quadrature { estimate: f64 },
    /// No classically forbidden region was found inside the bracket.
    NoBarrier,
    /// Energy does not exceed the asymptotic potential, so no outgoing channel.
    InvalidChannel,
    /// The method does not apply to this potential.
    NotApplicable(&'static str),
    /// No analytic result exists for this combination.
    Unsupported(&'static str),
}

impl Error {
    /// Short, comma-free token used in tables (`ERR:<code>`).
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::InvalidEnergy(_) => "invalid-energy",
            Error::DegenerateEnergy(_) => "degenerate-energy",
            Error::WrongCase(_) => "wrong-case",
            Error::UnsupportedPointwise => "unsupported-pointwise",
            Error::Pole => "pole",
            Error::NonConvergence { .. } => "non-convergence",
            Error::InvalidRegion { .. } => "invalid-region",
            Error::Quadrature { .. } => "quadrature",
            Error::NoBarrier => "no-barrier",
            Error::InvalidChannel => "invalid-channel",
            Error::NotApplicable(_) => "not-applicable",
            Error::Unsupported(_) => "unsupported",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
            Error::InvalidEnergy(e) => write!(f, "energy {e} is outside the scattering domain"),
            Error::DegenerateEnergy(e) => write!(
                f,
                "energy {e} equals the barrier height; perturb the energy slightly"
            ),
            Error::WrongCase(hint) => write!(f, "wrong case: {hint}"),
            Error::UnsupportedPointwise => {
                write!(f, "the delta potential cannot be evaluated pointwise")
            }
            Error::Pole => write!(
                f,
                "argument hits a pole (non-positive integer); perturb the energy"
            ),
            Error::NonConvergence { terms, last_term } => write!(
                f,
                "series did not converge after {terms} terms (last term magnitude {last_term:e})"
            ),
            Error::InvalidRegion { x } => {
                write!(f, "potential falls below the energy at x = {x} inside the region")
            }
            Error::Quadrature { estimate } => write!(
                f,
                "quadrature did not reach tolerance (achieved estimate {estimate})"
            ),
            Error::NoBarrier => write!(f, "no classically forbidden region inside the bracket"),
            Error::InvalidChannel => {
                write!(f, "energy does not exceed the asymptotic potential")
            }
            Error::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Error::Unsupported(why) => write!(f, "unsupported: {why}"),
        }
    }
}

impl core::error::Error for Error {}
