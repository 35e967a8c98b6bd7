//! `lpair report`: regenerate an existence table by live search plus
//! constructions and compare it against the expected cells, emitting
//! markdown and CSV with mismatches called out.

use anyhow::{bail, Result};
use clap::{Args, Subcommand};
use lpair_core::search::tables::{row_label, table1_range, table2_range, TABLE2_NS};
use std::fmt::Write as _;

#[derive(Args)]
pub struct ReportCmd {
    #[command(subcommand)]
    table: Table,
    /// Output format: markdown, csv, or both.
    #[arg(long, global = true, default_value = "both")]
    format: String,
    /// Worker threads (default: LPAIR_THREADS, then the pool default).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Table {
    /// Yamada-Pott pair existence on Z_n, odd n in 3..31.
    Table1 {
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 31)]
        to: u32,
    },
    /// Typed Legendre-pair existence on Z_n, odd n in 5..21.
    Table2 {
        #[arg(long, default_value_t = 5)]
        from: u32,
        #[arg(long, default_value_t = 21)]
        to: u32,
    },
}

fn yn(b: bool) -> &'static str {
    if b {
        "Y"
    } else {
        "N"
    }
}

fn existence(b: bool) -> &'static str {
    if b {
        "E"
    } else {
        "NE"
    }
}

struct Rendered {
    markdown: String,
    csv: String,
    mismatches: usize,
    cells: usize,
}

fn render_table1(from: u32, to: u32, threads: Option<usize>) -> Result<Rendered> {
    let cells = table1_range(from, to, threads)?;
    let mut markdown = String::from(
        "| n | expected | found | census | cardinality | status |\n\
         |---:|:---:|:---:|---:|---:|:---|\n",
    );
    let mut csv = String::from("n,expected,found,census,cardinality,match\n");
    let mut mismatches = 0;
    for cell in &cells {
        let status = if cell.matches() {
            "ok"
        } else {
            mismatches += 1;
            "**MISMATCH**"
        };
        writeln!(
            markdown,
            "| {} | {} | {} | {} | {} | {} |",
            cell.n,
            yn(cell.expected),
            yn(cell.exists),
            cell.census,
            cell.cardinality,
            status
        )?;
        writeln!(
            csv,
            "{},{},{},{},{},{}",
            cell.n,
            yn(cell.expected),
            yn(cell.exists),
            cell.census,
            cell.cardinality,
            cell.matches()
        )?;
    }
    Ok(Rendered {
        markdown,
        csv,
        mismatches,
        cells: cells.len(),
    })
}

fn render_table2(from: u32, to: u32, threads: Option<usize>) -> Result<Rendered> {
    let cells = table2_range(from, to, threads)?;
    let ns: Vec<u32> = TABLE2_NS
        .iter()
        .copied()
        .filter(|&n| n >= from && n <= to)
        .collect();

    let mut markdown = String::from("| types |");
    for n in &ns {
        write!(markdown, " {n} |")?;
    }
    markdown.push_str("\n|:--|");
    markdown.push_str(&":---:|".repeat(ns.len()));
    markdown.push('\n');

    let mut csv = String::from("types,n,expected,found,method,census\n");
    let mut mismatches = 0;
    let mut detail = String::new();
    for row in cells.chunks(ns.len()) {
        write!(markdown, "| {} |", row_label(row[0].types))?;
        for cell in row {
            if cell.matches() {
                write!(markdown, " {} |", existence(cell.exists))?;
            } else {
                mismatches += 1;
                write!(markdown, " **{}!** |", existence(cell.exists))?;
                writeln!(
                    detail,
                    "MISMATCH {} n={}: expected {}, found {}",
                    row_label(cell.types),
                    cell.n,
                    existence(cell.expected),
                    existence(cell.exists)
                )?;
            }
            writeln!(
                csv,
                "{},{},{},{},\"{}\",{}",
                row_label(cell.types),
                cell.n,
                existence(cell.expected),
                existence(cell.exists),
                cell.method,
                cell.census.map(|c| c.to_string()).unwrap_or_default()
            )?;
        }
        markdown.push('\n');
    }
    if !detail.is_empty() {
        markdown.push('\n');
        markdown.push_str(&detail);
    }
    Ok(Rendered {
        markdown,
        csv,
        mismatches,
        cells: cells.len(),
    })
}

impl ReportCmd {
    pub fn run(self) -> Result<i32> {
        let threads = crate::thread_count(self.threads)?;
        let rendered = match self.table {
            Table::Table1 { from, to } => render_table1(from, to, threads)?,
            Table::Table2 { from, to } => render_table2(from, to, threads)?,
        };
        match self.format.as_str() {
            "markdown" => print!("{}", rendered.markdown),
            "csv" => print!("{}", rendered.csv),
            "both" => print!("{}\n{}", rendered.markdown, rendered.csv),
            other => bail!("unknown format '{other}' (expected markdown, csv, or both)"),
        }
        println!(
            "{} cells regenerated, {} mismatches",
            rendered.cells, rendered.mismatches
        );
        Ok(if rendered.mismatches == 0 {
            crate::EXIT_TRUE
        } else {
            crate::EXIT_FALSE
        })
    }
}
