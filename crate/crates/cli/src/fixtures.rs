//! Scenario files shipped with the binary.

use crate::scenario::Scenario;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    /// Defining ideal is a squarefree monomial ideal.
    pub stanley_reisner: bool,
}

pub const FIXTURES: [Fixture; 6] = [
    Fixture {
        name: "axes",
        text: include_str!("../fixtures/axes.scenario"),
        stanley_reisner: true,
    },
    Fixture {
        name: "planes",
        text: include_str!("../fixtures/planes.scenario"),
        stanley_reisner: true,
    },
    Fixture {
        name: "plane_line",
        text: include_str!("../fixtures/plane_line.scenario"),
        stanley_reisner: true,
    },
    Fixture {
        name: "two_planes",
        text: include_str!("../fixtures/two_planes.scenario"),
        stanley_reisner: true,
    },
    Fixture {
        name: "fermat",
        text: include_str!("../fixtures/fermat.scenario"),
        stanley_reisner: false,
    },
    Fixture {
        name: "regular",
        text: include_str!("../fixtures/regular.scenario"),
        stanley_reisner: false,
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn scenario(&self) -> Scenario {
        Scenario::parse(self.text).expect("bundled fixture parses")
    }

    /// Same text with the characteristic line replaced.
    pub fn scenario_in_characteristic(&self, p: u64) -> Scenario {
        let text: String = self
            .text
            .lines()
            .map(|l| {
                if l.starts_with("characteristic:") {
                    format!("characteristic: {p}\n")
                } else {
                    format!("{l}\n")
                }
            })
            .collect();
        Scenario::parse(&text).expect("bundled fixture parses")
    }

    pub fn description(&self) -> String {
        self.scenario().description.unwrap_or_default()
    }
}
