//! Embedded reference data: the unique (3,12)-cage as a 1-based adjacency
//! table, and a 26-color packing coloring of it found by the exact solver
//! under natural vertex order.
//!
//! Vertex `i` of the table (1-based) is internal vertex `i − 1` everywhere
//! else in the crate. Rows list the three neighbors of each vertex in
//! ascending order; the first 63 vertices form one side of the bipartition
//! and the remaining 63 the other.

use std::env;
use std::path::PathBuf;

/// Directory holding optional external fixture files. Read from the
/// `MOOREPACK_FIXTURES` environment variable; `None` when unset or empty.
pub fn fixtures_dir() -> Option<PathBuf> {
    match env::var("MOOREPACK_FIXTURES") {
        Ok(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => None,
    }
}

/// Resolve `@fixtures/NAME` paths against [`fixtures_dir`]; other paths pass
/// through unchanged.
pub fn resolve_fixture_path(path: &str) -> PathBuf {
    if let Some(rest) = path.strip_prefix("@fixtures/") {
        if let Some(dir) = fixtures_dir() {
            return dir.join(rest);
        }
    }
    PathBuf::from(path)
}

/// The 26-color packing coloring of the cage, 1-based colors indexed by
/// internal vertex.
pub fn cage312_gamma() -> Vec<u32> {
    CAGE312_GAMMA.to_vec()
}

/// A 20-color packing coloring of the cage, found by this crate's own
/// exact-descent search (class sizes 63/18/19/6/5, then singletons). The
/// best upper witness shipped here; not known to be optimal.
pub fn cage312_witness20() -> Vec<u32> {
    CAGE312_W20.to_vec()
}

pub(crate) const CAGE312_ADJ: [[u16; 3]; 126] = [
    [64, 65, 78],
    [65, 66, 99],
    [66, 67, 84],
    [67, 68, 74],
    [68, 69, 95],
    [69, 70, 80],
    [70, 71, 76],
    [71, 72, 106],
    [64, 72, 73],
    [73, 74, 87],
    [74, 75, 108],
    [75, 76, 93],
    [76, 77, 83],
    [77, 78, 104],
    [78, 79, 89],
    [79, 80, 85],
    [80, 81, 115],
    [73, 81, 82],
    [82, 83, 96],
    [83, 84, 117],
    [84, 85, 102],
    [85, 86, 92],
    [86, 87, 113],
    [87, 88, 98],
    [88, 89, 94],
    [89, 90, 124],
    [82, 90, 91],
    [91, 92, 105],
    [92, 93, 126],
    [93, 94, 111],
    [94, 95, 101],
    [95, 96, 122],
    [96, 97, 107],
    [97, 98, 103],
    [70, 98, 99],
    [91, 99, 100],
    [100, 101, 114],
    [72, 101, 102],
    [102, 103, 120],
    [103, 104, 110],
    [68, 104, 105],
    [105, 106, 116],
    [106, 107, 112],
    [79, 107, 108],
    [100, 108, 109],
    [109, 110, 123],
    [81, 110, 111],
    [66, 111, 112],
    [112, 113, 119],
    [77, 113, 114],
    [114, 115, 125],
    [115, 116, 121],
    [88, 116, 117],
    [109, 117, 118],
    [69, 118, 119],
    [90, 119, 120],
    [75, 120, 121],
    [65, 121, 122],
    [86, 122, 123],
    [71, 123, 124],
    [67, 124, 125],
    [97, 125, 126],
    [64, 118, 126],
    [1, 9, 63],
    [1, 2, 58],
    [2, 3, 48],
    [3, 4, 61],
    [4, 5, 41],
    [5, 6, 55],
    [6, 7, 35],
    [7, 8, 60],
    [8, 9, 38],
    [9, 10, 18],
    [4, 10, 11],
    [11, 12, 57],
    [7, 12, 13],
    [13, 14, 50],
    [1, 14, 15],
    [15, 16, 44],
    [6, 16, 17],
    [17, 18, 47],
    [18, 19, 27],
    [13, 19, 20],
    [3, 20, 21],
    [16, 21, 22],
    [22, 23, 59],
    [10, 23, 24],
    [24, 25, 53],
    [15, 25, 26],
    [26, 27, 56],
    [27, 28, 36],
    [22, 28, 29],
    [12, 29, 30],
    [25, 30, 31],
    [5, 31, 32],
    [19, 32, 33],
    [33, 34, 62],
    [24, 34, 35],
    [2, 35, 36],
    [36, 37, 45],
    [31, 37, 38],
    [21, 38, 39],
    [34, 39, 40],
    [14, 40, 41],
    [28, 41, 42],
    [8, 42, 43],
    [33, 43, 44],
    [11, 44, 45],
    [45, 46, 54],
    [40, 46, 47],
    [30, 47, 48],
    [43, 48, 49],
    [23, 49, 50],
    [37, 50, 51],
    [17, 51, 52],
    [42, 52, 53],
    [20, 53, 54],
    [54, 55, 63],
    [49, 55, 56],
    [39, 56, 57],
    [52, 57, 58],
    [32, 58, 59],
    [46, 59, 60],
    [26, 60, 61],
    [51, 61, 62],
    [29, 62, 63],
];

pub(crate) const CAGE312_GAMMA: [u32; 126] = [
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 2, 3, 2, 3, 2, 3, 4,
    3, 5, 2, 6, 2, 5, 2, 4, 2, 7, 3, 8, 3, 2, 9, 2, 3, 2,
    3, 5, 3, 10, 11, 2, 3, 12, 13, 2, 3, 2, 14, 3, 15, 2, 16, 3,
    4, 17, 18, 3, 4, 19, 5, 3, 20, 21, 5, 3, 22, 23, 24, 25, 2, 26,
];

pub(crate) const CAGE312_W20: [u32; 126] = [
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 2, 3, 2, 4, 2, 8, 3,
    5, 9, 4, 3, 2, 4, 2, 3, 2, 3, 10, 4, 5, 2, 11, 2, 3, 2,
    4, 3, 2, 5, 3, 2, 4, 3, 5, 3, 2, 12, 2, 3, 13, 2, 3, 14,
    2, 15, 3, 16, 3, 17, 18, 3, 19, 3, 5, 3, 2, 6, 3, 20, 2, 7,
];
