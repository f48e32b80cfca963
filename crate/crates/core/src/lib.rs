pub mod classify;
pub mod cmap;
pub mod fpgroup;
pub mod vankampen;
