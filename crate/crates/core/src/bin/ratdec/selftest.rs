//! Small decoder runs checked against the brute-force codebook oracles.

use crate::rng::Rng;
use anyhow::Result;
use ratdec::goppa::{random_irreducible, wu_decode_goppa, GoppaCode};
use ratdec::grs::{wu_decode, GrsCode};
use ratdec::oracles::{CodebookOracle, DEFAULT_CAP};
use ratdec::decode::hamming_distance;
use ratdec::{Elem, Field};
use std::process::ExitCode;

fn check(name: &str, ok: bool, failures: &mut usize) {
    println!("{} {name}", if ok { "ok  " } else { "FAIL" });
    if !ok {
        *failures += 1;
    }
}

/// Random nonzero errors, or bit flips when `field` is `None`.
fn corrupt(rng: &mut Rng, field: Option<&Field>, c: &[Elem], weight: usize) -> Vec<Elem> {
    let mut r = c.to_vec();
    for i in rng.choose_distinct(r.len(), weight) {
        r[i] = match field {
            Some(f) => {
                let e = f.elem(1 + rng.below(f.order() as u64 - 1) as u32).expect("below q");
                f.add(r[i], e)
            }
            None if r[i] == Elem::ZERO => Elem::ONE,
            None => Elem::ZERO,
        };
    }
    r
}

pub fn run(quick: bool) -> Result<ExitCode> {
    let trials = if quick { 10 } else { 100 };
    let mut rng = Rng::new(2024);
    let mut failures = 0;

    let f13 = Field::prime(13)?;
    let grs = GrsCode::standard(&f13, 12, 3)?;
    let book = CodebookOracle::grs(&grs, DEFAULT_CAP)?;
    let mut agree = true;
    for weight in 0..=6 {
        for _ in 0..trials {
            let c = &book.words()[rng.below(book.len() as u64) as usize];
            let r = corrupt(&mut rng, Some(&f13), c, weight);
            let out = wu_decode(&grs, &r, 6)?;
            agree &= out.codewords() == book.list_within(&r, 6);
        }
    }
    check("GRS [12,3,10] over GF(13), tau = 6, matches the codebook", agree, &mut failures);

    let f32 = Field::binary(5)?;
    let g = random_irreducible(&f32, 3, &mut || rng.next_u64());
    let goppa = GoppaCode::with_first_support(&f32, g, 32)?;
    let book = CodebookOracle::goppa(&goppa, DEFAULT_CAP)?;
    let mut agree = true;
    for weight in 0..=3 {
        for _ in 0..trials {
            let c = &book.words()[rng.below(book.len() as u64) as usize];
            let r = corrupt(&mut rng, None, c, weight);
            let out = wu_decode_goppa(&goppa, &r, 3)?;
            agree &= out.codewords() == vec![c.clone()] && book.list_within(&r, 3) == vec![c.clone()];
        }
    }
    check("Goppa n = 32, t = 3, Patterson radius", agree, &mut failures);

    let f64_ = Field::binary(6)?;
    let g = random_irreducible(&f64_, 6, &mut || rng.next_u64());
    let goppa = GoppaCode::with_first_support(&f64_, g, 64)?;
    let mut agree = true;
    for _ in 0..(trials / 5).max(2) {
        let msg: Vec<Elem> = (0..goppa.k()).map(|_| if rng.below(2) == 1 { Elem::ONE } else { Elem::ZERO }).collect();
        let c = goppa.encode(&msg)?;
        let r = corrupt(&mut rng, None, &c, 7);
        let out = wu_decode_goppa(&goppa, &r, 7)?;
        agree &= out.codewords().contains(&c)
            && out.candidates.iter().all(|cand| {
                goppa.is_member(&cand.codeword).unwrap_or(false)
                    && hamming_distance(&cand.codeword, &r) <= 7
            });
    }
    check("Goppa n = 64, t = 6, tau = 7 beyond Patterson", agree, &mut failures);

    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
