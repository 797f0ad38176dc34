#include <surjhom/error.hpp>

#include <cstdlib>
#include <mutex>
#include <shared_mutex>

namespace surjhom {

namespace {
    auto env_size(const char * name, std::size_t fallback) -> std::size_t
    {
        if (auto * v = std::getenv(name)) {
            char * end = nullptr;
            auto parsed = std::strtoull(v, &end, 10);
            if (end != v && *end == '\0' && parsed > 0)
                return static_cast<std::size_t>(parsed);
        }
        return fallback;
    }

    struct Store {
        std::shared_mutex mutex;
        Limits value;

        Store()
        {
            Limits defaults;
            value.materialise = env_size("SURJHOM_SIZE_BOUND", defaults.materialise);
            value.solver_vertices = env_size("SURJHOM_SOLVER_BOUND", defaults.solver_vertices);
        }
    };

    auto store() -> Store &
    {
        static Store s;
        return s;
    }
}

auto limits() -> Limits
{
    auto & s = store();
    std::shared_lock lock(s.mutex);
    return s.value;
}

auto set_limits(const Limits & l) -> void
{
    auto & s = store();
    std::unique_lock lock(s.mutex);
    s.value = l;
}

} // namespace surjhom
