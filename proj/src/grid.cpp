#include "psalink/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "psalink/errors.hpp"

namespace psalink {

int SimulationGrid::bin_of(KiloHertz f) const {
    if (!is_on_grid(f))
        throw ConfigError("frequency " + std::to_string(f) + " kHz is not a multiple of df = " +
                          std::to_string(df_khz) + " kHz");
    const std::int64_t k = f / df_khz;
    const std::int64_t n = n_samples;
    if (k > n / 2 || k < -n / 2 + 1)
        throw ConfigError("frequency " + std::to_string(f) + " kHz exceeds the Nyquist offset of " +
                          std::to_string(df_khz * (n / 2)) + " kHz");
    return static_cast<int>(k >= 0 ? k : k + n);
}

KiloHertz SimulationGrid::bin_frequency_khz(int bin) const {
    const std::int64_t k = bin <= n_samples / 2 ? bin : bin - n_samples;
    return k * df_khz;
}

namespace {

int next_power_of_two(std::int64_t x) {
    int n = 1;
    while (n < x) n *= 2;
    return n;
}

}  // namespace

SimulationGrid build_grid(const GridRequest& request) {
    if (request.tones.empty()) throw ConfigError("grid request contains no tones");

    KiloHertz df = 0;
    for (KiloHertz tone : request.tones) {
        if (tone <= 0) throw ConfigError("tone frequencies must be positive");
        df = std::gcd(df, tone);
    }

    const double needed = std::max(request.min_sample_rate_hz / (static_cast<double>(df) * 1e3), 1.0);
    std::int64_t n_needed = static_cast<std::int64_t>(std::ceil(needed));
    n_needed = std::max<std::int64_t>(n_needed, request.min_n_samples);
    const int n = next_power_of_two(n_needed);

    if (n > request.max_n_samples) {
        // Name the tone that forces the small gcd: the one whose removal
        // would relax df the most.
        KiloHertz worst_tone = request.tones.front();
        KiloHertz best_gcd = df;
        for (std::size_t skip = 0; skip < request.tones.size(); ++skip) {
            KiloHertz g = 0;
            for (std::size_t i = 0; i < request.tones.size(); ++i)
                if (i != skip) g = std::gcd(g, request.tones[i]);
            if (g > best_gcd) {
                best_gcd = g;
                worst_tone = request.tones[skip];
            }
        }
        throw ConfigError("no feasible grid: tone " + std::to_string(worst_tone) +
                          " kHz forces df = " + std::to_string(df) + " kHz and " +
                          std::to_string(n) + " samples, above the limit of " +
                          std::to_string(request.max_n_samples));
    }

    SimulationGrid grid;
    grid.n_samples = n;
    grid.df_khz = df;
    return grid;
}

}  // namespace psalink
