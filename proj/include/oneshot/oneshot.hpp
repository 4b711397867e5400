#pragma once

#include "oneshot/analysis/confusability.hpp"
#include "oneshot/analysis/independent_set.hpp"
#include "oneshot/analysis/unambiguity.hpp"
#include "oneshot/bounds/bounds.hpp"
#include "oneshot/catalog.hpp"
#include "oneshot/core/adversary.hpp"
#include "oneshot/core/alphabet.hpp"
#include "oneshot/core/cuts.hpp"
#include "oneshot/core/network.hpp"
#include "oneshot/core/network_code.hpp"
#include "oneshot/core/outer_code.hpp"
#include "oneshot/engine/transfer.hpp"
#include "oneshot/error.hpp"
#include "oneshot/schemes/prime_field.hpp"
#include "oneshot/schemes/reed_solomon.hpp"
#include "oneshot/schemes/schemes.hpp"
#include "oneshot/search/search.hpp"
