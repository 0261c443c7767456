//! The built-in worked example: the ternary affine groupoid over Z₃ with
//! α = (2, 2, 0) and β = (1, 1, 1), leaders (2, 0, 2), and the alternating
//! exponent schedule (1, 2), walked through encryption and decryption one
//! step at a time.
//!
//! Every printed value is computed by the library and cross-checked here,
//! so the transcript doubles as an executable trace of the algorithm.

use std::fmt::Write as _;

use algebra_core::{affine_groupoid, perm, Place, Symbol, Translation};
use markovski_cipher::{CipherKey, Decryptor, Encryptor};

const PLAINTEXT: [Symbol; 6] = [2, 0, 1, 1, 2, 1];

pub fn transcript() -> String {
    let alpha: Vec<Symbol> = vec![2, 2, 0];
    let beta: Vec<Symbol> = vec![1, 1, 1];
    let forward = affine_groupoid(&[alpha.clone(), beta.clone()], 3).expect("fixture is valid");
    let key = CipherKey::new(forward, vec![2, 0, 2], vec![1, 2]).expect("fixture key is valid");
    let last = Place::last(3);

    let mut out = String::new();
    let w = &mut out;

    writeln!(
        w,
        "Markovski stream cipher: worked ternary example over Z_3"
    )
    .unwrap();
    writeln!(w, "f(x1, x2, x3) = a(x1) + b(x2) + x3 (mod 3)").unwrap();
    writeln!(w, "  a: {}", map_line(&alpha)).unwrap();
    writeln!(w, "  b: {}", map_line(&beta)).unwrap();
    writeln!(w).unwrap();

    writeln!(w, "forward table (row-major, x1 most significant):").unwrap();
    writeln!(w, "{}", row(key.forward().entries())).unwrap();
    writeln!(w).unwrap();

    writeln!(w, "translations T_{{x1,x2}} x3 = f(x1, x2, x3):").unwrap();
    for x1 in 0..3 as Symbol {
        for x2 in 0..3 as Symbol {
            let translation = Translation::new(key.forward(), last, vec![x1, x2]).unwrap();
            for x3 in 0..3 as Symbol {
                let v = translation.apply(x3).unwrap();
                writeln!(w, "T_{{{x1},{x2}}} {x3} = {v}").unwrap();
            }
        }
    }
    writeln!(w).unwrap();

    writeln!(w, "inverse table (row-major):").unwrap();
    writeln!(w, "{}", row(key.inverse().entries())).unwrap();
    writeln!(w).unwrap();

    // On this key every translation satisfies T⁻¹ = T²; verify before claiming.
    for x1 in 0..3 as Symbol {
        for x2 in 0..3 as Symbol {
            let fwd = Translation::new(key.forward(), last, vec![x1, x2]).unwrap();
            let inv = fwd.inverse_translation(key.inverse()).unwrap();
            let fwd_perm = fwd.permutation();
            assert_eq!(
                inv.permutation(),
                perm::compose(&fwd_perm, &fwd_perm),
                "inverse translation is not the square at ({x1}, {x2})"
            );
        }
    }
    writeln!(w, "for every (x, y): T^-1(x, y, -) = T^2(x, y, -)").unwrap();
    writeln!(w).unwrap();

    writeln!(w, "leaders: {}", row(key.leaders())).unwrap();
    writeln!(w, "exponents: {}", row_u32(key.exponents())).unwrap();
    writeln!(w).unwrap();

    writeln!(w, "plaintext:").unwrap();
    writeln!(w, "{}", row(&PLAINTEXT)).unwrap();
    writeln!(w).unwrap();

    writeln!(w, "encryption:").unwrap();
    let mut encryptor = Encryptor::new(&key);
    let mut ciphertext = Vec::new();
    for &u in &PLAINTEXT {
        let step = encryptor.position();
        let fixed = encryptor.state().fixed_args();
        let e = key.exponent_at(step);
        let v = encryptor.push(u).expect("fixture symbols are in range");
        writeln!(
            w,
            "step {step}: v = T^{e}_{{{},{}}} {u} = {v}",
            fixed[0], fixed[1]
        )
        .unwrap();
        ciphertext.push(v);
    }
    writeln!(w).unwrap();

    writeln!(w, "ciphertext:").unwrap();
    writeln!(w, "{}", row(&ciphertext)).unwrap();
    writeln!(w).unwrap();

    writeln!(w, "decryption (inverse-table translations):").unwrap();
    let mut decryptor = Decryptor::new(&key);
    let mut recovered = Vec::new();
    for &v in &ciphertext {
        let step = decryptor.position();
        let fixed = decryptor.state().fixed_args();
        let e = key.exponent_at(step);
        let u = decryptor.push(v).expect("fixture symbols are in range");
        writeln!(
            w,
            "step {step}: u = T^-{e}_{{{},{}}} {v} = {u}",
            fixed[0], fixed[1]
        )
        .unwrap();
        recovered.push(u);
    }
    writeln!(w).unwrap();

    assert_eq!(recovered, PLAINTEXT, "demo failed to round-trip");
    writeln!(w, "recovered plaintext:").unwrap();
    writeln!(w, "{}", row(&recovered)).unwrap();

    out
}

fn row(symbols: &[Symbol]) -> String {
    symbols
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn row_u32(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn map_line(map: &[Symbol]) -> String {
    map.iter()
        .enumerate()
        .map(|(x, v)| format!("{x} -> {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
