//! Kernels, cokernels and mono/epi factorizations found by search, next to
//! their set-level descriptions.

use invcat::category::FiniteCategory;
use invcat::exactness::{cokernel, is_epi, is_kernel, is_mono, kernel, mono_epi_factorize};
use invcat::pbij::{PBij, PbijCategory};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = PbijCategory::canonical(&[0, 1, 2, 3]);
    let three = cat.object("3").expect("object 3").clone();
    let two = cat.object("2").expect("object 2").clone();

    let f = PBij::new(&three, &two, &[("1", "2"), ("3", "1")])?;
    println!(
        "f = {f}: mono {}, epi {}",
        is_mono(&cat, &f),
        is_epi(&cat, &f)
    );

    let k = kernel(&cat, &f)?;
    println!(
        "kernel   {k} : {} -> {}",
        cat.dom(&k).name(),
        cat.cod(&k).name()
    );
    println!(
        "  is a kernel: {}, k k* = {} = 1 - f*f = {}",
        is_kernel(&cat, &k, &f),
        k.compose(&k.inverse())?,
        f.kernel()
    );
    println!("cokernel {}", cokernel(&cat, &f)?);

    let fac = mono_epi_factorize(&cat, &f)?;
    println!("f = p . q through object {}", fac.through.name());
    println!("  q = {} (epi {})", fac.q, is_epi(&cat, &fac.q));
    println!("  p = {} (mono {})", fac.p, is_mono(&cat, &fac.p));
    Ok(())
}
