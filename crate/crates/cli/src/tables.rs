use std::path::PathBuf;

use clap::Args;
use iso_wirtinger::coeff::{discrete_table, max_order, smooth_table};

use crate::{fmt_f64, write_output, UsageError};

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Number of vertices for the discrete tables.
    #[arg(long, required_unless_present = "smooth", conflicts_with = "smooth")]
    k: Option<usize>,
    /// Order. Discrete tables default to every admissible order.
    #[arg(long, required_if_eq("smooth", "true"))]
    m: Option<usize>,
    /// Dump the smooth-curve table instead of the discrete one.
    #[arg(long)]
    smooth: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

struct Rows {
    writer: csv::Writer<Vec<u8>>,
}

impl Rows {
    fn new() -> Result<Self, UsageError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["family", "m", "k", "index", "value"])?;
        Ok(Rows { writer })
    }

    fn push(&mut self, family: &str, m: usize, k: Option<usize>, index: usize, value: f64) -> Result<(), UsageError> {
        let k = k.map(|k| k.to_string()).unwrap_or_default();
        self.writer.write_record([family, &m.to_string(), &k, &index.to_string(), &fmt_f64(value)])?;
        Ok(())
    }

    fn series(&mut self, family: &str, m: usize, k: Option<usize>, first: usize, values: &[f64]) -> Result<(), UsageError> {
        for (i, &v) in values.iter().enumerate() {
            self.push(family, m, k, first + i, v)?;
        }
        Ok(())
    }

    fn finish(self) -> Result<String, UsageError> {
        let bytes = self.writer.into_inner().map_err(|e| UsageError(e.to_string()))?;
        Ok(String::from_utf8(bytes)?)
    }
}

pub fn run(args: &TablesArgs) -> Result<(), UsageError> {
    let mut rows = Rows::new()?;
    if args.smooth {
        let m = args.m.expect("clap requires m with --smooth");
        let t = smooth_table(m)?;
        rows.series("p", m, None, 0, &t.p)?;
        rows.series("s", m, None, 1, &t.s)?;
        rows.push("p_at_one", m, None, 0, t.p_at_one)?;
        rows.push("theorem_constant", m, None, 0, t.theorem_constant)?;
    } else {
        let k = args.k.expect("clap requires k without --smooth");
        let orders: Vec<usize> = match args.m {
            Some(m) => vec![m],
            None => (1..=max_order(k).max(1)).collect(),
        };
        for m in orders {
            let t = discrete_table(m, k)?;
            rows.series("lambda_root", m, Some(k), 1, &t.roots)?;
            rows.series("c", m, Some(k), 0, &t.c)?;
            rows.series("lambda", m, Some(k), 0, &t.lambda)?;
            rows.series("S", m, Some(k), 0, &t.s_cap)?;
        }
    }
    write_output(args.output.as_deref(), &rows.finish()?)
}
