//! The posets Y^r, up and down operators, and normal forms of words.

use critgroup::posets::{
    alpha_values, down_matrix, path_count, rank_basis, rank_size, up_matrix, word_to_normal_form,
    UDWord,
};

fn main() -> critgroup::Result<()> {
    let basis = rank_basis(2, 2);
    let names: Vec<String> = basis.elements().iter().map(|x| x.to_string()).collect();
    println!("(Y^2)_2 = {names:?}");
    println!("U: (Y^2)_1 → (Y^2)_2 = {}", up_matrix(2, 1).to_json());
    println!("D: (Y^2)_2 → (Y^2)_1 = {}", down_matrix(2, 2).to_json());
    for r in 1..=3 {
        let sizes: Vec<u64> = (0..=6).map(|n| rank_size(r, n)).collect();
        println!("rank sizes of Y^{r}: {sizes:?}");
    }
    let x = "3,1|2".parse()?;
    println!("saturated chains to 3,1|2: {}", path_count(&x));
    for w in ["DU", "UDUD", "DDUU", "UDDU"] {
        let f = word_to_normal_form(&w.parse::<UDWord>()?, 1)?;
        let alpha: Vec<String> = alpha_values(&f, 5).iter().map(|a| a.to_string()).collect();
        println!("{w} = {f} at r = 1, eigenvalues α_0..α_5 = {}", alpha.join(" "));
    }
    Ok(())
}
