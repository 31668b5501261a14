//! Geodesics of the bicycle configuration space.
//!
//! A bicycle of length `ell` is modelled by its front contact point `(x, y)`
//! and frame angle `theta`; the back wheel sits at distance `ell` behind the
//! front along the frame. Paths are horizontal when the back wheel does not
//! skid. The crate integrates the sub-Riemannian geodesic flow of this
//! system, lifts prescribed front tracks, flips paths, classifies the
//! resulting elasticae, computes bicycle holonomy and builds shortcut
//! competitors for metric lines.

pub mod analysis;
pub mod cli;
pub mod closed_forms;
pub mod diff;
pub mod error;
pub mod figures;
pub mod geometry;
pub mod holonomy;
pub mod integrate;
pub mod io;
pub mod metric_lines;
pub mod path;
pub mod track;
pub mod verify;

pub use error::{BikeError, Result};
pub use geometry::{BikeLength, ConfigPoint, Orientation, RigidMotion, Vec2};
pub use integrate::{
    canonicalize, horizontal_lift, integrate_geodesic, CotangentState, Dynamics, GeodesicRun,
    ReducedState,
};
pub use path::{flip_path, path_length, PathSample, SampledBikePath};
pub use track::FrontTrack;
