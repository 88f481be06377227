//! CSV writers for snapshots and diagnostics.

use std::io::{self, Write};

use crate::diagnostics::Diagnostics;
use crate::state::SimState;

pub const SNAPSHOT_HEADER: &str = "t,x_index,z1,z2";
pub const DIAGNOSTICS_HEADER: &str = "t,min_curvature,area,arc_chord_min,speed_variation";

pub fn write_snapshots<W: Write>(out: &mut W, snapshots: &[SimState]) -> io::Result<()> {
    writeln!(out, "{SNAPSHOT_HEADER}")?;
    for s in snapshots {
        for (j, p) in s.points.iter().enumerate() {
            writeln!(out, "{:.16e},{j},{:.16e},{:.16e}", s.time, p[0], p[1])?;
        }
    }
    Ok(())
}

pub fn write_diagnostics<W: Write>(out: &mut W, rows: &[(f64, Diagnostics)]) -> io::Result<()> {
    writeln!(out, "{DIAGNOSTICS_HEADER}")?;
    for (t, d) in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            t, d.min_curvature, d.area, d.arc_chord_min, d.speed_variation
        )?;
    }
    Ok(())
}
