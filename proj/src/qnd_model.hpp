// Domain model for the repeated-measurement engine: a system observable that
// commutes with the free Hamiltonian's diagonal part, a Hermitian transition
// term, and one apparatus block per system level.  The measurement coupling is
// block diagonal over system levels, so each block carries its own spectrum.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spectral.hpp"
#include "types.hpp"

namespace zeno {

struct QndModel {
    RealVector level_energies;      // diagonal of the unperturbed system term
    RealVector observable_diag;     // monitored observable, diagonal in the same basis
    Matrix transition;              // Hermitian system perturbation driving decay
    std::vector<Matrix> meas_blocks;  // apparatus Hamiltonian, one block per level
    Vector system_state;            // initial system amplitudes
    Vector apparatus_state;         // initial apparatus amplitudes

    Eigen::Index system_dim() const { return level_energies.size(); }
    Eigen::Index apparatus_dim() const {
        return meas_blocks.empty() ? 0 : meas_blocks.front().rows();
    }
    Eigen::Index joint_dim() const { return system_dim() * apparatus_dim(); }

    // Checks dimensions, Hermiticity of the transition term and every
    // apparatus block, and state normalization.  Throws on violation.
    void validate() const;

    // True when at least two apparatus blocks differ, i.e. the measurement
    // actually records which level the system occupies.
    bool measurement_coupled() const;
};

struct BlockSpectra {
    std::vector<RealVector> levels;  // ascending eigenvalues per system level
    std::vector<Matrix> bases;       // unitary eigenvector matrix per level

    Eigen::Index level_count() const { return static_cast<Eigen::Index>(levels.size()); }
    Eigen::Index block_dim() const {
        return levels.empty() ? 0 : levels.front().size();
    }

    // Overlap matrix between the eigenbases of two blocks; entry (b, a) is
    // <block n, vector b | block l, vector a>.
    Matrix overlap(Eigen::Index n, Eigen::Index l) const;

    // Spectra with identity bases, for callers that only know eigenvalues.
    static BlockSpectra from_eigenvalues(const std::vector<std::vector<double>>& values);
};

// Diagonalizes every apparatus block of the model.
BlockSpectra block_spectra(const QndModel& model);

// Assembles the joint-space free Hamiltonian (system term plus transition,
// tensored with the apparatus identity) and the block-diagonal measurement
// Hamiltonian.  Index convention: joint index = level * apparatus_dim + j.
std::pair<Matrix, Matrix> joint_hamiltonians(const QndModel& model);

}  // namespace zeno
