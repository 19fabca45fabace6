//! The JSON solution document.

use serde::{Deserialize, Serialize};

use segcover::{Disk, Rect, Square};
use segcover::{DiskPair, Solution};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquareDoc {
    pub min_x: f64,
    pub min_y: f64,
    pub side: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskDoc {
    pub center_x: f64,
    pub center_y: f64,
    pub radius: f64,
    pub lower_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub n: usize,
    pub bounds: BoundsDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingDoc {
    pub solve_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub problem: String,
    pub sigma: f64,
    pub config: u8,
    pub squares: Vec<SquareDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disks: Option<Vec<DiskDoc>>,
    pub instance: InstanceDoc,
    pub timing: TimingDoc,
}

fn square(s: &Square) -> SquareDoc {
    SquareDoc { min_x: s.min.x, min_y: s.min.y, side: s.side }
}

fn disk(d: &Disk, lower_bound: f64) -> DiskDoc {
    DiskDoc { center_x: d.center.x, center_y: d.center.y, radius: d.radius, lower_bound }
}

fn bounds(r: &Rect) -> BoundsDoc {
    BoundsDoc { min_x: r.min.x, min_y: r.min.y, max_x: r.max.x, max_y: r.max.y }
}

impl SolutionDocument {
    pub fn new(sol: &Solution, disks: Option<&DiskPair>, solve_ms: f64) -> Self {
        Self {
            problem: sol.problem.as_str().to_string(),
            sigma: sol.sigma,
            config: sol.config,
            squares: vec![square(&sol.s1), square(&sol.s2)],
            disks: disks.map(|d| vec![disk(&d.d1, d.lower_bound), disk(&d.d2, d.lower_bound)]),
            instance: InstanceDoc { n: sol.n, bounds: bounds(&sol.bounds) },
            timing: TimingDoc { solve_ms },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Output of the `oracle` command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub problem: String,
    pub value: f64,
    pub n: usize,
}
