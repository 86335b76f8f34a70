#pragma once

#include <effint/errors.hpp>

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace effint {

struct Generator {
    std::string name;
    int degree = 0;
    int weight = 1;

    bool operator==(const Generator&) const = default;
};

/// Ordered set of formal generators; the index of a generator is its id.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens))
    {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name.empty()) throw PreconditionError("generator with empty name");
            if (gens_[i].weight < 1)
                throw PreconditionError("generator '" + gens_[i].name + "' has weight < 1");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].name == gens_[i].name)
                    throw PreconditionError("duplicate generator name '" + gens_[i].name + "'");
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](int id) const { return gens_.at(static_cast<std::size_t>(id)); }
    const std::vector<Generator>& generators() const { return gens_; }

    int find(const std::string& name) const
    {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    int index(const std::string& name) const
    {
        int i = find(name);
        if (i < 0) throw PreconditionError("unknown generator '" + name + "'");
        return i;
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Generator> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<Generator> gens)
{
    return std::make_shared<const Alphabet>(std::move(gens));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace effint
