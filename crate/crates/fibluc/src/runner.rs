//! Parallel grid checking. Cells are independent; reports come back in
//! `(id, n, k)` order no matter how rayon schedules them.

use std::time::Instant;

use fibluc_core::idlang::{self, check_at, grid, CheckError, Identity, Ranges};
use fibluc_core::identities::{build_catalog, select, validate_bounds, IdentityError};
use fibluc_core::report::{CheckReport, Clock};
use rayon::prelude::*;

/// Milliseconds since construction.
pub struct WallClock(Instant);

impl WallClock {
    pub fn start() -> Self {
        WallClock(Instant::now())
    }
}

impl Clock for WallClock {
    fn now_ms(&self) -> f64 {
        self.0.elapsed().as_secs_f64() * 1e3
    }
}

/// Catalog run on `n <= n_max`, `k <= k_max`, optionally restricted to `filter`.
pub fn run_catalog(
    n_max: u32,
    k_max: u32,
    filter: Option<&[&str]>,
) -> Result<CheckReport, IdentityError> {
    validate_bounds(n_max, k_max)?;
    let catalog = build_catalog();
    let cases = select(&catalog, filter)?;
    let cells: Vec<_> = cases
        .iter()
        .flat_map(|c| c.cells(n_max, k_max).into_iter().map(move |(n, k)| (*c, n, k)))
        .collect();
    let records = cells
        .into_par_iter()
        .map(|(case, n, k)| case.check_cell(n, k, &WallClock::start()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CheckReport::from_records(records))
}

/// Parallel version of [`idlang::check`].
pub fn check_identity(identity: &Identity, ranges: &Ranges, id: &str) -> Result<CheckReport, CheckError> {
    let cells = grid(identity, ranges)?;
    let records = cells
        .par_iter()
        .map(|b| {
            let clock = WallClock::start();
            let verdict = check_at(identity, b);
            idlang::record(id, b, verdict, clock.now_ms())
        })
        .collect();
    Ok(CheckReport::from_records(records))
}
