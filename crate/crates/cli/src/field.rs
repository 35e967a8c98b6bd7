//! `lpair field`: inspect GF(p^m): modulus, generator, cyclotomic classes
//! and numbers, and the quartic decomposition data when they apply.

use anyhow::Result;
use clap::Args;
use lpair_core::field::{proper_representation, t_alpha, CyclotomicClasses};
use lpair_core::FiniteField;

#[derive(Args)]
pub struct FieldCmd {
    /// Field order q = p^m.
    #[arg(long)]
    q: u64,
    /// Generator element (default: smallest primitive element).
    #[arg(long)]
    alpha: Option<usize>,
    /// Also print the order-d cyclotomic classes and numbers (d | q - 1).
    #[arg(long)]
    d: Option<u64>,
}

impl FieldCmd {
    pub fn run(self) -> Result<i32> {
        let field = FiniteField::of_order_with_alpha(self.q, self.alpha)?;
        println!("q: {} = {}^{}", field.q(), field.p(), field.m());
        println!("modulus: {}", field.modulus_string());
        println!("alpha: {} (element index)", field.alpha());
        println!("additive group: {}", field.additive_group().spec_string());

        if self.q % 4 == 1 {
            let rep = proper_representation(self.q)?;
            println!(
                "proper representation: q = s^2 + 4t^2 with s={} |t|={}",
                rep.s, rep.t_abs
            );
            println!("t(alpha): {}", t_alpha(&field, rep)?);
        }

        if let Some(d) = self.d {
            let classes = CyclotomicClasses::new(&field, d)?;
            println!(
                "cyclotomic classes: d={d} class_size={}",
                classes.class_size()
            );
            for i in 0..d {
                let row: Vec<String> = (0..d).map(|j| classes.number(i, j).to_string()).collect();
                println!("numbers ({i}, j): {}", row.join(" "));
            }
        }
        Ok(crate::EXIT_TRUE)
    }
}
