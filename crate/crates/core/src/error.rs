use thiserror::Error;

/// Failures of the jet arithmetic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("jet orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("jet order {0} exceeds the supported maximum of 12")]
    OrderTooLarge(usize),
    #[error("requested derivative order {needed} but the jet only carries {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("non-finite jet entry at index {0}")]
    NonFinite(usize),
    #[error("composition needs a nonzero first derivative of the inner function")]
    NotInvertible,
}

/// Typed kinematic degeneracies and invalid inputs.
///
/// Every variant maps to a stable kebab-case reason code via
/// [`KinematicsError::code`], which the CLI writes into its reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KinematicsError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("velocity vanishes; tangent undefined")]
    ZeroVelocity,
    #[error("velocity and acceleration are collinear; curvature center at infinity")]
    InfiniteCurvature,
    #[error("angular velocity vanishes; velocity pole at infinity")]
    PureTranslation,
    #[error("angular state of order {0} vanishes; acceleration pole undefined")]
    DegenerateAngularState(usize),
    #[error("Bresse loci do not intersect in a unique second point")]
    DegenerateIntersection,
    #[error("zero-normal circles of order 1 and 2 coincide")]
    CoincidentCircles,
    #[error("zero-normal diameters are parallel; Ball's point falls into the pole")]
    CoincidentDirection,
    #[error("pole rays are parallel")]
    ParallelRays,
    #[error("point lies on the inflection circle; path curvature radius is infinite")]
    OnInflectionCircle,
    #[error("input points are collinear with the pole")]
    CollinearInput,
    #[error("conjugate point coincides with its moving point or lies on the tangent")]
    DegenerateConjugate,
    #[error("helper point of the Ball's point construction coincides with the pole")]
    DegenerateHelper,
    #[error("polode is straight at this instant; curvature radius is infinite")]
    StraightPolode,
    #[error("pole is stationary; polode tangent undefined")]
    UndefinedTangent,
    #[error("{0} is not finite")]
    NonFinite(&'static str),
    #[error("invalid integration interval")]
    InvalidInterval,
    #[error("index out of range: {0}")]
    OutOfRange(&'static str),
}

impl KinematicsError {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        use KinematicsError::*;
        match self {
            Jet(JetError::OrderMismatch { .. }) => "order-mismatch",
            Jet(JetError::OrderTooLarge(_)) => "order-too-large",
            Jet(JetError::InsufficientOrder { .. }) => "insufficient-order",
            Jet(JetError::NonFinite(_)) => "non-finite",
            Jet(JetError::NotInvertible) => "not-invertible",
            ZeroVelocity => "zero-velocity",
            InfiniteCurvature => "infinite-curvature",
            PureTranslation => "pure-translation",
            DegenerateAngularState(_) => "degenerate-angular-state",
            DegenerateIntersection => "degenerate-intersection",
            CoincidentCircles => "coincident-circles",
            CoincidentDirection => "coincident-direction",
            ParallelRays => "parallel-rays",
            OnInflectionCircle => "on-inflection-circle",
            CollinearInput => "collinear-input",
            DegenerateConjugate => "degenerate-conjugate",
            DegenerateHelper => "degenerate-helper",
            StraightPolode => "straight-polode",
            UndefinedTangent => "stationary-pole",
            NonFinite(_) => "non-finite",
            InvalidInterval => "invalid-interval",
            OutOfRange(_) => "out-of-range",
        }
    }
}

pub type Result<T, E = KinematicsError> = std::result::Result<T, E>;
