//! `lpair verify`: check one predicate against array, pair, or matrix
//! files, printing the census that decides it.

use crate::formats::read_arrays;
use anyhow::{bail, Context, Result};
use clap::Args;
use lpair_core::hadamard::PmMatrix;
use lpair_core::{
    is_almost_difference_set, is_difference_set, is_legendre_pair,
    is_supplementary_difference_sets, is_yamada_pott_pair, GArray,
};
use std::path::PathBuf;

#[derive(Args)]
pub struct VerifyCmd {
    /// Array or pair files; one `.hm` matrix file for `hadamard`.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// One of: legendre, yamada-pott, perfect, balanced, ds, ads, sds,
    /// hadamard.
    #[arg(long)]
    predicate: String,
    /// Common difference count for ds/ads/sds (inferred when omitted).
    #[arg(long)]
    lambda: Option<usize>,
    /// For ads: how many differences hit lambda (inferred when omitted).
    #[arg(long)]
    t_count: Option<usize>,
}

fn describe(label: &str, a: &GArray) {
    let dist: Vec<String> = a
        .autocorrelation_distribution()
        .iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect();
    println!(
        "{label}: {} {} ones={} row_sum={} symmetry={} energy={} peak={}",
        a.group().spec_string(),
        a.alphabet().name(),
        a.ones_count(),
        a.row_sum(),
        a.symmetry_type().name(),
        a.correlation_energy(false),
        a.peak_correlation()
    );
    println!("{label} distribution: {}", dist.join(" "));
}

impl VerifyCmd {
    pub fn run(self) -> Result<i32> {
        if self.predicate == "hadamard" {
            return self.check_matrix();
        }
        let mut arrays = Vec::new();
        for path in &self.files {
            arrays.extend(read_arrays(path)?);
        }
        let labels = ["a", "b", "c", "d"];
        for (i, a) in arrays.iter().enumerate() {
            describe(labels.get(i).copied().unwrap_or("x"), a);
        }

        let verdict = match self.predicate.as_str() {
            "legendre" => is_legendre_pair(exactly_two(&arrays)?.0, exactly_two(&arrays)?.1)?,
            "yamada-pott" => is_yamada_pott_pair(exactly_two(&arrays)?.0, exactly_two(&arrays)?.1)?,
            "perfect" => exactly_one(&arrays)?.is_perfect(),
            "balanced" => exactly_one(&arrays)?.is_balanced(),
            "ds" => self.check_ds(exactly_one(&arrays)?)?,
            "ads" => self.check_ads(exactly_one(&arrays)?)?,
            "sds" => self.check_sds(&arrays)?,
            other => bail!("unknown predicate '{other}'"),
        };
        println!("predicate {}: {}", self.predicate, verdict);
        Ok(if verdict {
            crate::EXIT_TRUE
        } else {
            crate::EXIT_FALSE
        })
    }

    fn check_matrix(&self) -> Result<i32> {
        let [path] = self.files.as_slice() else {
            bail!("the hadamard predicate takes exactly one matrix file");
        };
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let matrix = PmMatrix::parse(&text)?;
        let verdict = matrix.is_hadamard();
        println!("order: {}", matrix.order());
        println!(
            "symmetric: {}, skew-type: {}",
            matrix.is_symmetric(),
            matrix.is_skew_type()
        );
        println!("predicate hadamard: {verdict}");
        Ok(if verdict {
            crate::EXIT_TRUE
        } else {
            crate::EXIT_FALSE
        })
    }

    fn check_ds(&self, a: &GArray) -> Result<bool> {
        let group = a.group();
        let n = group.order();
        let set = a.one_set();
        let lambda = match self.lambda {
            Some(l) => l,
            None if n > 1 => a.difference_function(1),
            None => 0,
        };
        println!("ds parameters: v={n} k={} lambda={lambda}", set.len());
        Ok(is_difference_set(group, &set, n, set.len(), lambda)?)
    }

    fn check_ads(&self, a: &GArray) -> Result<bool> {
        let group = a.group();
        let n = group.order();
        let set = a.one_set();
        let census: Vec<usize> = (1..n).map(|t| a.difference_function(t)).collect();
        let lambda = match self.lambda {
            Some(l) => l,
            None => census.iter().copied().min().unwrap_or(0),
        };
        let t_count = match self.t_count {
            Some(t) => t,
            None => census.iter().filter(|&&d| d == lambda).count(),
        };
        println!(
            "ads parameters: v={n} k={} lambda={lambda} t={t_count}",
            set.len()
        );
        Ok(is_almost_difference_set(
            group,
            &set,
            n,
            set.len(),
            lambda,
            t_count,
        )?)
    }

    fn check_sds(&self, arrays: &[GArray]) -> Result<bool> {
        let group = arrays[0].group();
        for a in arrays {
            if a.group() != group {
                bail!(
                    "sds sets live on different groups: {} vs {}",
                    group.spec_string(),
                    a.group().spec_string()
                );
            }
        }
        let sets: Vec<Vec<usize>> = arrays.iter().map(GArray::one_set).collect();
        let lambda = match self.lambda {
            Some(l) => l,
            None if group.order() > 1 => arrays.iter().map(|a| a.difference_function(1)).sum(),
            None => 0,
        };
        println!("sds parameters: {} sets, lambda={lambda}", sets.len());
        Ok(is_supplementary_difference_sets(group, &sets, lambda)?)
    }
}

fn exactly_one(arrays: &[GArray]) -> Result<&GArray> {
    let [a] = arrays else {
        bail!(
            "this predicate takes exactly one array, got {}",
            arrays.len()
        );
    };
    Ok(a)
}

fn exactly_two(arrays: &[GArray]) -> Result<(&GArray, &GArray)> {
    let [a, b] = arrays else {
        bail!(
            "this predicate takes exactly one pair, got {} arrays",
            arrays.len()
        );
    };
    Ok((a, b))
}
