//! Scenario files shipped with the crate.

use crate::error::{Error, Result};

use super::{parse_scenario, ScenarioInstance};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../scenarios/", $name)))),*]
    };
}

/// `(file name, contents)` of every bundled scenario, sorted by name.
pub const BUNDLED: &[(&str, &str)] = bundle![
    "degree10.orb",
    "hirzebruch_covers.orb",
    "horikawa_plane_covers.orb",
    "nevanlinna_defects.orb",
    "persson_51.orb",
    "persson_511.orb",
    "persson_52.orb",
    "quintic_5lines.orb",
    "steiner_octic.orb",
    "steiner_pencil.orb",
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn bundled_scenario(name: &str) -> Result<Vec<ScenarioInstance>> {
    let text = bundled(name).ok_or_else(|| Error::Usage(format!("no bundled scenario `{name}`")))?;
    parse_scenario(text)
}
