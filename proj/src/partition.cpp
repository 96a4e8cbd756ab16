#include "spechtcoh/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace spechtcoh {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return Partition();
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned part : parts_)
        for (unsigned j = 0; j < part; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    return Composition(parts_).to_string();
}

std::string Partition::to_dashed_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos)
            next = text.size();
        const std::string token = text.substr(pos, next - pos);
        if (token.empty())
            throw std::invalid_argument("Partition: empty part in '" + text + "'");
        std::size_t used = 0;
        const unsigned long value = std::stoul(token, &used);
        if (used != token.size())
            throw std::invalid_argument("Partition: bad part '" + token + "'");
        parts.push_back(static_cast<unsigned>(value));
        pos = next + 1;
    }
    if (parts.empty())
        throw std::invalid_argument("Partition: empty input");
    return Partition(std::move(parts));
}

namespace {

void extend_partitions(std::vector<unsigned>& stack, unsigned remaining, unsigned max_part,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        extend_partitions(stack, remaining - part, part, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned d) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    extend_partitions(stack, d, d == 0 ? 1 : d, out);
    return out;
}

}  // namespace spechtcoh
