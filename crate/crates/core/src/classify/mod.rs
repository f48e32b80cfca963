//! Skeleton census, insertions, reducibility and the classification of maximal
//! sextics with a type E8 singular point.

pub mod census;
pub mod classes;
pub mod dynkin;
pub mod insertion;
pub mod singularity;
pub mod table;

pub use census::{e8_perturbation_census, sigma2_census, PerturbationSkeleton, VertexProfile};
pub use classes::{all_classes, classes_on, deformation_classes, ClassKind, CurveClass, CurveKind};
pub use dynkin::{dynkin_induced, DynkinError};
pub use insertion::{
    attach, fiber_data, is_reducible, remove_insertion, splitting_markings, FiberData,
    InsertionError, InsertionSite, Marking,
};
pub use singularity::{Ade, SetParseError, SingularitySet};
pub use table::{classify, LmnCell, TableRow};
