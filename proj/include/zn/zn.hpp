#pragma once

#include <zn/errors.hpp>
#include <zn/numth.hpp>
#include <zn/partition.hpp>
#include <zn/gensets.hpp>
#include <zn/graph.hpp>
#include <zn/linalg.hpp>
#include <zn/oracle.hpp>
#include <zn/spectra.hpp>
#include <zn/verify.hpp>
#include <zn/io.hpp>
