use std::fmt;

/// The seven regions of the positive octant: six strict coordinate orderings
/// plus the tie set where two coordinates coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region3 {
    XltYltZ = 1,
    XltZltY = 2,
    YltXltZ = 3,
    YltZltX = 4,
    ZltXltY = 5,
    ZltYltX = 6,
    Tie = 7,
}

impl Region3 {
    pub const ALL: [Region3; 7] = [
        Region3::XltYltZ,
        Region3::XltZltY,
        Region3::YltXltZ,
        Region3::YltZltX,
        Region3::ZltXltY,
        Region3::ZltYltX,
        Region3::Tie,
    ];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Option<Region3> {
        Region3::ALL.get((i as usize).checked_sub(1)?).copied()
    }
}

impl fmt::Display for Region3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region3::XltYltZ => "x<y<z",
            Region3::XltZltY => "x<z<y",
            Region3::YltXltZ => "y<x<z",
            Region3::YltZltX => "y<z<x",
            Region3::ZltXltY => "z<x<y",
            Region3::ZltYltX => "z<y<x",
            Region3::Tie => "none of the above",
        })
    }
}

pub fn classify_region_3d([x, y, z]: [u64; 3]) -> Region3 {
    if x == y || y == z || x == z {
        return Region3::Tie;
    }
    match (x < y, y < z, x < z) {
        (true, true, _) => Region3::XltYltZ,
        (true, false, true) => Region3::XltZltY,
        (true, false, false) => Region3::ZltXltY,
        (false, true, true) => Region3::YltXltZ,
        (false, true, false) => Region3::YltZltX,
        (false, false, _) => Region3::ZltYltX,
    }
}
