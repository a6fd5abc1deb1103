//! Hard ceilings for the exponential routines, overridable through the
//! environment (read once per process).

use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// `MCGRAPH_MAX_ENUM_N`: largest order for exhaustive graph generation.
    pub max_enum_vertices: usize,
    /// `MCGRAPH_MAX_PM_N`: largest order for perfect matching enumeration.
    pub max_pm_vertices: usize,
    /// `MCGRAPH_MAX_SHORE_N`: largest order for shore (cut) enumeration.
    pub max_shore_vertices: usize,
    /// `MCGRAPH_MAX_SUBSET_N`: largest order for barrier and P-set searches.
    pub max_subset_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum_vertices: 9,
            max_pm_vertices: 24,
            max_shore_vertices: 14,
            max_subset_vertices: 14,
        }
    }
}

fn env_usize(key: &str, default: usize) -> usize {
    std::env::var(key)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

impl Limits {
    pub fn from_env() -> Self {
        let d = Limits::default();
        Limits {
            max_enum_vertices: env_usize("MCGRAPH_MAX_ENUM_N", d.max_enum_vertices),
            max_pm_vertices: env_usize("MCGRAPH_MAX_PM_N", d.max_pm_vertices),
            max_shore_vertices: env_usize("MCGRAPH_MAX_SHORE_N", d.max_shore_vertices),
            max_subset_vertices: env_usize("MCGRAPH_MAX_SUBSET_N", d.max_subset_vertices),
        }
    }

    pub fn get() -> &'static Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        LIMITS.get_or_init(Limits::from_env)
    }
}
