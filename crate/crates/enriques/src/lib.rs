//! The Enriques quotient of the general quartic Hessian K3 surface, on the
//! lattice side: chamber, smooth rational curves, faces and their
//! equivalence classes, elliptic fibrations, RDP configurations, and the
//! Vinberg-chamber count.

pub mod ade;
pub mod around;
pub mod context;
pub mod curves;
pub mod faces;
pub mod fibrations;
pub mod rdp;
pub mod relations;
pub mod vinberg;
pub mod witnesses;

pub use context::{build_context, EnriquesContext, WallLabel};
pub use ade::AdeType;
pub use around::group_around_face;
pub use curves::{rational_curves, CurveTable};
pub use faces::{compute_faces, FaceData};
pub use fibrations::{elliptic_fibrations, fibration_table, max_fiber_degree, Fibration};
pub use rdp::{rdp_configurations, rdp_degree_bound, RdpConfigurations};
pub use relations::{defining_relations, Relations};
pub use vinberg::vinberg_count;
pub use witnesses::{autinj_witnesses, WitnessReport};
