//! Planar combinatorial maps (skeletons): faces, gonality, genus, isomorphism and
//! symmetry.

pub mod canon;
pub mod map;

pub use canon::{
    canonical_code, canonical_code_decorated, face_image, mirror_code, symmetries,
    symmetries_decorated, Automorphism, Decoration, Orientation,
};
pub use map::{build_map, CombinatorialMap, Dart, MapError, MapJson, Region, Role};

use serde::{Deserialize, Serialize};

/// A skeleton together with the optional white vertex `u` of an insertion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Skeleton {
    pub map: CombinatorialMap,
    pub distinguished_white: Option<u32>,
}

impl Skeleton {
    pub fn plain(map: CombinatorialMap) -> Self {
        Skeleton {
            map,
            distinguished_white: None,
        }
    }

    pub fn decoration(&self) -> Decoration {
        Decoration {
            distinguished: self.distinguished_white,
            marked_faces: Vec::new(),
        }
    }

    pub fn code(&self, orientation: Orientation) -> Vec<u8> {
        canonical_code_decorated(&self.map, &self.decoration(), orientation)
    }
}

pub fn faces(map: &CombinatorialMap) -> Vec<Region> {
    map.faces()
}

pub fn genus(map: &CombinatorialMap) -> i64 {
    map.genus()
}
