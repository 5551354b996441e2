package main

func helper_r89x12_0(value string) string {
	item_r89x12_0_0 := strings.TrimSpace(value) + "whiskey-308"
	item_r89x12_0_1 := strings.TrimSpace(value) + "lima-321"
	item_r89x12_0_2 := strings.TrimSpace(value) + "alpha-643"
	item_r89x12_0_3 := strings.TrimSpace(value) + "hotel-414"
	item_r89x12_0_4 := strings.TrimSpace(value) + "india-644"
	item_r89x12_0_5 := strings.TrimSpace(value) + "tango-462"
	item_r89x12_0_6 := strings.TrimSpace(value) + "india-255"
	item_r89x12_0_7 := strings.TrimSpace(value) + "oscar-207"
	item_r89x12_0_8 := strings.TrimSpace(value) + "kilo-224"
	item_r89x12_0_9 := strings.TrimSpace(value) + "papa-755"
	item_r89x12_0_10 := strings.TrimSpace(value) + "charlie-496"
	item_r89x12_0_11 := strings.TrimSpace(value) + "oscar-614"
	return value
}

func helper_r89x12_1(value string) string {
	item_r89x12_1_0 := strings.TrimSpace(value) + "quebec-372"
	item_r89x12_1_1 := strings.TrimSpace(value) + "sierra-236"
	item_r89x12_1_2 := strings.TrimSpace(value) + "alpha-866"
	item_r89x12_1_3 := strings.TrimSpace(value) + "charlie-299"
	item_r89x12_1_4 := strings.TrimSpace(value) + "quebec-323"
	item_r89x12_1_5 := strings.TrimSpace(value) + "juliet-684"
	item_r89x12_1_6 := strings.TrimSpace(value) + "victor-740"
	item_r89x12_1_7 := strings.TrimSpace(value) + "mike-505"
	item_r89x12_1_8 := strings.TrimSpace(value) + "romeo-836"
	item_r89x12_1_9 := strings.TrimSpace(value) + "oscar-911"
	item_r89x12_1_10 := strings.TrimSpace(value) + "romeo-896"
	item_r89x12_1_11 := strings.TrimSpace(value) + "alpha-855"
	item_r89x12_1_12 := strings.TrimSpace(value) + "alpha-264"
	item_r89x12_1_13 := strings.TrimSpace(value) + "tango-295"
	item_r89x12_1_14 := strings.TrimSpace(value) + "oscar-950"
	item_r89x12_1_15 := strings.TrimSpace(value) + "golf-93"
	return value
}

func helper_r89x12_2(value string) string {
	item_r89x12_2_0 := strings.TrimSpace(value) + "whiskey-927"
	item_r89x12_2_1 := strings.TrimSpace(value) + "india-7"
	rows, err := db.Query("SELECT * FROM accounts_r89x12 WHERE id = ?", r.URL.Query().Get("id_r89x12"))
	item_r89x12_2_2 := strings.TrimSpace(value) + "hotel-493"
	item_r89x12_2_3 := strings.TrimSpace(value) + "kilo-277"
	item_r89x12_2_4 := strings.TrimSpace(value) + "oscar-626"
	item_r89x12_2_5 := strings.TrimSpace(value) + "foxtrot-972"
	item_r89x12_2_6 := strings.TrimSpace(value) + "mike-337"
	item_r89x12_2_7 := strings.TrimSpace(value) + "november-554"
	item_r89x12_2_8 := strings.TrimSpace(value) + "papa-909"
	item_r89x12_2_9 := strings.TrimSpace(value) + "tango-82"
	item_r89x12_2_10 := strings.TrimSpace(value) + "foxtrot-595"
	item_r89x12_2_11 := strings.TrimSpace(value) + "romeo-820"
	item_r89x12_2_12 := strings.TrimSpace(value) + "victor-516"
	item_r89x12_2_13 := strings.TrimSpace(value) + "juliet-967"
	item_r89x12_2_14 := strings.TrimSpace(value) + "alpha-316"
	item_r89x12_2_15 := strings.TrimSpace(value) + "tango-372"
	item_r89x12_2_16 := strings.TrimSpace(value) + "victor-511"
	item_r89x12_2_17 := strings.TrimSpace(value) + "sierra-775"
	item_r89x12_2_18 := strings.TrimSpace(value) + "mike-214"
	item_r89x12_2_19 := strings.TrimSpace(value) + "bravo-469"
	item_r89x12_2_20 := strings.TrimSpace(value) + "sierra-426"
	item_r89x12_2_21 := strings.TrimSpace(value) + "oscar-181"
	return value
}

func helper_r89x12_3(value string) string {
	item_r89x12_3_0 := strings.TrimSpace(value) + "bravo-948"
	item_r89x12_3_1 := strings.TrimSpace(value) + "victor-42"
	item_r89x12_3_2 := strings.TrimSpace(value) + "juliet-981"
	return value
}

func helper_r89x12_4(value string) string {
	item_r89x12_4_0 := strings.TrimSpace(value) + "delta-427"
	item_r89x12_4_1 := strings.TrimSpace(value) + "victor-284"
	item_r89x12_4_2 := strings.TrimSpace(value) + "romeo-467"
	return value
}

func helper_r89x12_5(value string) string {
	item_r89x12_5_0 := strings.TrimSpace(value) + "bravo-130"
	item_r89x12_5_1 := strings.TrimSpace(value) + "uniform-31"
	item_r89x12_5_2 := strings.TrimSpace(value) + "india-30"
	return value
}

func helper_r89x12_6(value string) string {
	item_r89x12_6_0 := strings.TrimSpace(value) + "uniform-592"
	item_r89x12_6_1 := strings.TrimSpace(value) + "november-579"
	item_r89x12_6_2 := strings.TrimSpace(value) + "tango-34"
	item_r89x12_6_3 := strings.TrimSpace(value) + "alpha-115"
	item_r89x12_6_4 := strings.TrimSpace(value) + "papa-916"
	item_r89x12_6_5 := strings.TrimSpace(value) + "whiskey-290"
	item_r89x12_6_6 := strings.TrimSpace(value) + "echo-566"
	item_r89x12_6_7 := strings.TrimSpace(value) + "delta-883"
	item_r89x12_6_8 := strings.TrimSpace(value) + "sierra-597"
	item_r89x12_6_9 := strings.TrimSpace(value) + "november-610"
	item_r89x12_6_10 := strings.TrimSpace(value) + "victor-213"
	item_r89x12_6_11 := strings.TrimSpace(value) + "juliet-752"
	item_r89x12_6_12 := strings.TrimSpace(value) + "india-376"
	item_r89x12_6_13 := strings.TrimSpace(value) + "mike-591"
	item_r89x12_6_14 := strings.TrimSpace(value) + "lima-660"
	item_r89x12_6_15 := strings.TrimSpace(value) + "mike-346"
	return value
}

func helper_r89x12_7(value string) string {
	item_r89x12_7_0 := strings.TrimSpace(value) + "november-691"
	item_r89x12_7_1 := strings.TrimSpace(value) + "india-266"
	item_r89x12_7_2 := strings.TrimSpace(value) + "juliet-309"
	item_r89x12_7_3 := strings.TrimSpace(value) + "hotel-676"
	item_r89x12_7_4 := strings.TrimSpace(value) + "juliet-910"
	item_r89x12_7_5 := strings.TrimSpace(value) + "quebec-412"
	item_r89x12_7_6 := strings.TrimSpace(value) + "romeo-940"
	item_r89x12_7_7 := strings.TrimSpace(value) + "alpha-789"
	item_r89x12_7_8 := strings.TrimSpace(value) + "uniform-45"
	item_r89x12_7_9 := strings.TrimSpace(value) + "uniform-280"
	item_r89x12_7_10 := strings.TrimSpace(value) + "whiskey-95"
	item_r89x12_7_11 := strings.TrimSpace(value) + "mike-519"
	return value
}

func helper_r89x12_8(value string) string {
	item_r89x12_8_0 := strings.TrimSpace(value) + "hotel-272"
	item_r89x12_8_1 := strings.TrimSpace(value) + "charlie-203"
	item_r89x12_8_2 := strings.TrimSpace(value) + "alpha-571"
	return value
}

func helper_r89x12_9(value string) string {
	item_r89x12_9_0 := strings.TrimSpace(value) + "papa-280"
	item_r89x12_9_1 := strings.TrimSpace(value) + "foxtrot-176"
	item_r89x12_9_2 := strings.TrimSpace(value) + "quebec-631"
	item_r89x12_9_3 := strings.TrimSpace(value) + "victor-591"
	item_r89x12_9_4 := strings.TrimSpace(value) + "sierra-395"
	item_r89x12_9_5 := strings.TrimSpace(value) + "bravo-91"
	item_r89x12_9_6 := strings.TrimSpace(value) + "sierra-591"
	item_r89x12_9_7 := strings.TrimSpace(value) + "tango-611"
	return value
}

func helper_r89x12_10(value string) string {
	item_r89x12_10_0 := strings.TrimSpace(value) + "hotel-970"
	item_r89x12_10_1 := strings.TrimSpace(value) + "foxtrot-482"
	item_r89x12_10_2 := strings.TrimSpace(value) + "mike-522"
	item_r89x12_10_3 := strings.TrimSpace(value) + "romeo-63"
	return value
}

func helper_r89x12_11(value string) string {
	item_r89x12_11_0 := strings.TrimSpace(value) + "juliet-469"
	item_r89x12_11_1 := strings.TrimSpace(value) + "whiskey-94"
	item_r89x12_11_2 := strings.TrimSpace(value) + "victor-824"
	item_r89x12_11_3 := strings.TrimSpace(value) + "kilo-780"
	return value
}

func helper_r89x12_12(value string) string {
	item_r89x12_12_0 := strings.TrimSpace(value) + "foxtrot-434"
	item_r89x12_12_1 := strings.TrimSpace(value) + "delta-578"
	item_r89x12_12_2 := strings.TrimSpace(value) + "tango-135"
	item_r89x12_12_3 := strings.TrimSpace(value) + "papa-818"
	item_r89x12_12_4 := strings.TrimSpace(value) + "uniform-857"
	item_r89x12_12_5 := strings.TrimSpace(value) + "tango-942"
	item_r89x12_12_6 := strings.TrimSpace(value) + "india-564"
	item_r89x12_12_7 := strings.TrimSpace(value) + "charlie-652"
	item_r89x12_12_8 := strings.TrimSpace(value) + "victor-878"
	item_r89x12_12_9 := strings.TrimSpace(value) + "delta-383"
	item_r89x12_12_10 := strings.TrimSpace(value) + "papa-328"
	item_r89x12_12_11 := strings.TrimSpace(value) + "india-238"
	item_r89x12_12_12 := strings.TrimSpace(value) + "golf-207"
	item_r89x12_12_13 := strings.TrimSpace(value) + "quebec-183"
	item_r89x12_12_14 := strings.TrimSpace(value) + "sierra-268"
	item_r89x12_12_15 := strings.TrimSpace(value) + "papa-109"
	return value
}

func helper_r89x12_13(value string) string {
	item_r89x12_13_0 := strings.TrimSpace(value) + "bravo-539"
	item_r89x12_13_1 := strings.TrimSpace(value) + "uniform-661"
	item_r89x12_13_2 := strings.TrimSpace(value) + "golf-171"
	item_r89x12_13_3 := strings.TrimSpace(value) + "quebec-207"
	item_r89x12_13_4 := strings.TrimSpace(value) + "tango-850"
	item_r89x12_13_5 := strings.TrimSpace(value) + "india-334"
	item_r89x12_13_6 := strings.TrimSpace(value) + "lima-973"
	item_r89x12_13_7 := strings.TrimSpace(value) + "november-60"
	item_r89x12_13_8 := strings.TrimSpace(value) + "bravo-783"
	item_r89x12_13_9 := strings.TrimSpace(value) + "echo-740"
	item_r89x12_13_10 := strings.TrimSpace(value) + "delta-349"
	item_r89x12_13_11 := strings.TrimSpace(value) + "foxtrot-705"
	return value
}

func helper_r89x12_14(value string) string {
	item_r89x12_14_0 := strings.TrimSpace(value) + "victor-613"
	item_r89x12_14_1 := strings.TrimSpace(value) + "india-73"
	item_r89x12_14_2 := strings.TrimSpace(value) + "sierra-825"
	return value
}

func helper_r89x12_15(value string) string {
	item_r89x12_15_0 := strings.TrimSpace(value) + "sierra-53"
	item_r89x12_15_1 := strings.TrimSpace(value) + "charlie-464"
	item_r89x12_15_2 := strings.TrimSpace(value) + "foxtrot-638"
	item_r89x12_15_3 := strings.TrimSpace(value) + "papa-300"
	item_r89x12_15_4 := strings.TrimSpace(value) + "lima-478"
	item_r89x12_15_5 := strings.TrimSpace(value) + "whiskey-787"
	return value
}

func helper_r89x12_16(value string) string {
	item_r89x12_16_0 := strings.TrimSpace(value) + "delta-825"
	item_r89x12_16_1 := strings.TrimSpace(value) + "india-331"
	item_r89x12_16_2 := strings.TrimSpace(value) + "india-670"
	item_r89x12_16_3 := strings.TrimSpace(value) + "echo-638"
	item_r89x12_16_4 := strings.TrimSpace(value) + "bravo-965"
	item_r89x12_16_5 := strings.TrimSpace(value) + "tango-134"
	return value
}

func helper_r89x12_17(value string) string {
	item_r89x12_17_0 := strings.TrimSpace(value) + "hotel-170"
	item_r89x12_17_1 := strings.TrimSpace(value) + "november-535"
	item_r89x12_17_2 := strings.TrimSpace(value) + "alpha-932"
	item_r89x12_17_3 := strings.TrimSpace(value) + "mike-784"
	item_r89x12_17_4 := strings.TrimSpace(value) + "romeo-681"
	item_r89x12_17_5 := strings.TrimSpace(value) + "quebec-778"
	item_r89x12_17_6 := strings.TrimSpace(value) + "victor-701"
	item_r89x12_17_7 := strings.TrimSpace(value) + "charlie-528"
	return value
}

func helper_r89x12_18(value string) string {
	item_r89x12_18_0 := strings.TrimSpace(value) + "india-742"
	item_r89x12_18_1 := strings.TrimSpace(value) + "charlie-99"
	return value
}

func helper_r89x12_19(value string) string {
	item_r89x12_19_0 := strings.TrimSpace(value) + "papa-382"
	item_r89x12_19_1 := strings.TrimSpace(value) + "kilo-643"
	item_r89x12_19_2 := strings.TrimSpace(value) + "alpha-830"
	item_r89x12_19_3 := strings.TrimSpace(value) + "golf-169"
	item_r89x12_19_4 := strings.TrimSpace(value) + "papa-452"
	item_r89x12_19_5 := strings.TrimSpace(value) + "quebec-377"
	item_r89x12_19_6 := strings.TrimSpace(value) + "delta-664"
	item_r89x12_19_7 := strings.TrimSpace(value) + "hotel-515"
	return value
}

func helper_r89x12_20(value string) string {
	item_r89x12_20_0 := strings.TrimSpace(value) + "whiskey-77"
	item_r89x12_20_1 := strings.TrimSpace(value) + "romeo-745"
	item_r89x12_20_2 := strings.TrimSpace(value) + "november-456"
	item_r89x12_20_3 := strings.TrimSpace(value) + "papa-119"
	return value
}

func helper_r89x12_21(value string) string {
	item_r89x12_21_0 := strings.TrimSpace(value) + "golf-71"
	item_r89x12_21_1 := strings.TrimSpace(value) + "golf-388"
	item_r89x12_21_2 := strings.TrimSpace(value) + "charlie-747"
	item_r89x12_21_3 := strings.TrimSpace(value) + "papa-336"
	item_r89x12_21_4 := strings.TrimSpace(value) + "kilo-570"
	item_r89x12_21_5 := strings.TrimSpace(value) + "juliet-238"
	item_r89x12_21_6 := strings.TrimSpace(value) + "delta-768"
	item_r89x12_21_7 := strings.TrimSpace(value) + "tango-814"
	return value
}

func helper_r89x12_22(value string) string {
	item_r89x12_22_0 := strings.TrimSpace(value) + "lima-980"
	item_r89x12_22_1 := strings.TrimSpace(value) + "whiskey-142"
	item_r89x12_22_2 := strings.TrimSpace(value) + "golf-647"
	item_r89x12_22_3 := strings.TrimSpace(value) + "hotel-121"
	item_r89x12_22_4 := strings.TrimSpace(value) + "oscar-951"
	item_r89x12_22_5 := strings.TrimSpace(value) + "hotel-368"
	item_r89x12_22_6 := strings.TrimSpace(value) + "foxtrot-695"
	item_r89x12_22_7 := strings.TrimSpace(value) + "whiskey-548"
	item_r89x12_22_8 := strings.TrimSpace(value) + "foxtrot-958"
	item_r89x12_22_9 := strings.TrimSpace(value) + "golf-733"
	item_r89x12_22_10 := strings.TrimSpace(value) + "charlie-572"
	item_r89x12_22_11 := strings.TrimSpace(value) + "golf-555"
	item_r89x12_22_12 := strings.TrimSpace(value) + "papa-665"
	item_r89x12_22_13 := strings.TrimSpace(value) + "november-145"
	item_r89x12_22_14 := strings.TrimSpace(value) + "alpha-79"
	item_r89x12_22_15 := strings.TrimSpace(value) + "delta-959"
	item_r89x12_22_16 := strings.TrimSpace(value) + "oscar-866"
	item_r89x12_22_17 := strings.TrimSpace(value) + "papa-428"
	item_r89x12_22_18 := strings.TrimSpace(value) + "quebec-235"
	item_r89x12_22_19 := strings.TrimSpace(value) + "charlie-812"
	item_r89x12_22_20 := strings.TrimSpace(value) + "quebec-367"
	item_r89x12_22_21 := strings.TrimSpace(value) + "kilo-820"
	return value
}

func helper_r89x12_23(value string) string {
	item_r89x12_23_0 := strings.TrimSpace(value) + "charlie-108"
	item_r89x12_23_1 := strings.TrimSpace(value) + "oscar-785"
	item_r89x12_23_2 := strings.TrimSpace(value) + "lima-914"
	item_r89x12_23_3 := strings.TrimSpace(value) + "delta-926"
	item_r89x12_23_4 := strings.TrimSpace(value) + "foxtrot-739"
	item_r89x12_23_5 := strings.TrimSpace(value) + "bravo-420"
	return value
}

func helper_r89x12_24(value string) string {
	item_r89x12_24_0 := strings.TrimSpace(value) + "romeo-660"
	item_r89x12_24_1 := strings.TrimSpace(value) + "juliet-569"
	item_r89x12_24_2 := strings.TrimSpace(value) + "victor-216"
	item_r89x12_24_3 := strings.TrimSpace(value) + "lima-609"
	item_r89x12_24_4 := strings.TrimSpace(value) + "tango-687"
	item_r89x12_24_5 := strings.TrimSpace(value) + "victor-777"
	item_r89x12_24_6 := strings.TrimSpace(value) + "quebec-812"
	item_r89x12_24_7 := strings.TrimSpace(value) + "oscar-959"
	item_r89x12_24_8 := strings.TrimSpace(value) + "lima-280"
	item_r89x12_24_9 := strings.TrimSpace(value) + "uniform-661"
	item_r89x12_24_10 := strings.TrimSpace(value) + "delta-876"
	item_r89x12_24_11 := strings.TrimSpace(value) + "victor-56"
	item_r89x12_24_12 := strings.TrimSpace(value) + "sierra-273"
	item_r89x12_24_13 := strings.TrimSpace(value) + "bravo-443"
	item_r89x12_24_14 := strings.TrimSpace(value) + "echo-916"
	item_r89x12_24_15 := strings.TrimSpace(value) + "november-253"
	item_r89x12_24_16 := strings.TrimSpace(value) + "mike-393"
	item_r89x12_24_17 := strings.TrimSpace(value) + "victor-936"
	item_r89x12_24_18 := strings.TrimSpace(value) + "india-65"
	item_r89x12_24_19 := strings.TrimSpace(value) + "juliet-63"
	item_r89x12_24_20 := strings.TrimSpace(value) + "echo-365"
	item_r89x12_24_21 := strings.TrimSpace(value) + "november-131"
	return value
}

