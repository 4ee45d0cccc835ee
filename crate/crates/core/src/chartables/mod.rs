//! Character tables, representation-ring arithmetic and critical groups of
//! representations.

mod builders;
mod critical;
mod fusion;
mod rep;
mod table;

pub use builders::{
    abelian_elements, build_abelian_table, build_dihedral_table, build_symmetric_table,
    builtin_table, cycle_type_class_size, murnaghan_nakayama,
};
pub use critical::{
    critical_group, critical_group_order, ctilde, is_faithful, reduced_critical_matrix,
    repeated_value_subgroups, s6_outer_automorphism, tensor_action_matrix, tensor_product, twist,
    twist_map_on_critical_groups,
};
pub use fusion::{
    abelian_subgroup_fusion, cyclic_in_dihedral_fusion, ind_map_on_critical_groups,
    res_map_on_critical_groups, restrict_rep, restriction_matrix, symmetric_fusion, ClassFusion,
};
pub use rep::RepVector;
pub use table::{CharacterTable, ConjugacyClass};
