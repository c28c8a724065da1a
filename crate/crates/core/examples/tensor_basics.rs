//! Building tensors, evaluating the linear form, JSON round-trip, and the
//! symmetry operations.

use hypernorm::tensor::{symmetrize_pair, DenseHypermatrix};

fn main() -> hypernorm::Result<()> {
    let a = DenseHypermatrix::new(vec![2, 2, 2], vec![1.0, 2.0, 2.0, 0.0, 0.5, -1.0, -1.0, 3.0])?;
    let x = [vec![1.0, 0.0], vec![0.6, 0.8], vec![0.6, 0.8]];
    println!("L_A(x) = {}", a.linear_form(&x)?);
    println!("∂_1 L = {:?}", a.partial_gradient(&x, 0)?);
    println!("contracted over axis 1: {:?}", a.contract_to_matrix(&x, 1, 2)?.entries());
    println!("(2,3)-symmetric: {}, symmetric: {}", a.is_jk_symmetric(1, 2, 1e-12), a.is_symmetric(1e-12));

    let json = a.to_json_string();
    println!("{json}");
    assert_eq!(DenseHypermatrix::from_json_str(&json)?, a);

    let flipped = a.sign_transform(1, 2, &[1.0, -1.0])?;
    println!("sign-flipped entries: {:?}", flipped.entries());
    println!("fully symmetrized: {:?}", a.symmetrized()?.entries());

    let z = symmetrize_pair(&[1.0, 0.0, 0.0], &[0.0, 0.6, 0.8], 2.0)?;
    println!("merged unit vector: {z:.6?}");
    Ok(())
}
