//! Exact computation of F-pure thresholds of homogeneous coordinate rings of
//! flag varieties G/Q, via principal chains of poset ideals and positive-root
//! sums. All arithmetic is exact (integers and rationals, no floats).

pub mod fpt;
pub mod lattices;
pub mod root_system;

pub use fpt::{evaluate, evaluate_with_mode, FlagQuery, FptError, FptResult, Method, Mode, WeightSpec};
pub use lattices::{FinitePoset, LatticeError, PrincipalChain, TupleElement, YoungLatticeSpec};
pub use root_system::{CartanMatrix, Family, ParabolicSpec, Root, RootSystem, RootSystemError, RootSystemType, WeightVector};
