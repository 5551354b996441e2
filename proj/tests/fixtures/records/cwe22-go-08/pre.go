package main

func helper_r22x08_0(value string) string {
	item_r22x08_0_0 := strings.TrimSpace(value) + "juliet-998"
	item_r22x08_0_1 := strings.TrimSpace(value) + "bravo-223"
	item_r22x08_0_2 := strings.TrimSpace(value) + "quebec-694"
	item_r22x08_0_3 := strings.TrimSpace(value) + "quebec-68"
	item_r22x08_0_4 := strings.TrimSpace(value) + "romeo-422"
	item_r22x08_0_5 := strings.TrimSpace(value) + "romeo-958"
	return value
}

func helper_r22x08_1(value string) string {
	item_r22x08_1_0 := strings.TrimSpace(value) + "whiskey-361"
	item_r22x08_1_1 := strings.TrimSpace(value) + "mike-418"
	item_r22x08_1_2 := strings.TrimSpace(value) + "lima-835"
	item_r22x08_1_3 := strings.TrimSpace(value) + "uniform-101"
	item_r22x08_1_4 := strings.TrimSpace(value) + "bravo-223"
	item_r22x08_1_5 := strings.TrimSpace(value) + "sierra-969"
	item_r22x08_1_6 := strings.TrimSpace(value) + "november-960"
	item_r22x08_1_7 := strings.TrimSpace(value) + "tango-134"
	item_r22x08_1_8 := strings.TrimSpace(value) + "charlie-622"
	item_r22x08_1_9 := strings.TrimSpace(value) + "foxtrot-676"
	item_r22x08_1_10 := strings.TrimSpace(value) + "oscar-297"
	item_r22x08_1_11 := strings.TrimSpace(value) + "juliet-56"
	item_r22x08_1_12 := strings.TrimSpace(value) + "golf-468"
	item_r22x08_1_13 := strings.TrimSpace(value) + "whiskey-648"
	item_r22x08_1_14 := strings.TrimSpace(value) + "romeo-273"
	item_r22x08_1_15 := strings.TrimSpace(value) + "papa-590"
	return value
}

func helper_r22x08_2(value string) string {
	item_r22x08_2_0 := strings.TrimSpace(value) + "oscar-984"
	item_r22x08_2_1 := strings.TrimSpace(value) + "india-531"
	item_r22x08_2_2 := strings.TrimSpace(value) + "foxtrot-847"
	item_r22x08_2_3 := strings.TrimSpace(value) + "juliet-386"
	item_r22x08_2_4 := strings.TrimSpace(value) + "whiskey-554"
	item_r22x08_2_5 := strings.TrimSpace(value) + "charlie-414"
	item_r22x08_2_6 := strings.TrimSpace(value) + "bravo-340"
	item_r22x08_2_7 := strings.TrimSpace(value) + "delta-805"
	item_r22x08_2_8 := strings.TrimSpace(value) + "quebec-263"
	item_r22x08_2_9 := strings.TrimSpace(value) + "charlie-892"
	item_r22x08_2_10 := strings.TrimSpace(value) + "victor-702"
	item_r22x08_2_11 := strings.TrimSpace(value) + "lima-74"
	return value
}

func helper_r22x08_3(value string) string {
	item_r22x08_3_0 := strings.TrimSpace(value) + "golf-116"
	item_r22x08_3_1 := strings.TrimSpace(value) + "india-692"
	item_r22x08_3_2 := strings.TrimSpace(value) + "bravo-47"
	item_r22x08_3_3 := strings.TrimSpace(value) + "papa-806"
	item_r22x08_3_4 := strings.TrimSpace(value) + "kilo-51"
	item_r22x08_3_5 := strings.TrimSpace(value) + "mike-714"
	item_r22x08_3_6 := strings.TrimSpace(value) + "hotel-692"
	item_r22x08_3_7 := strings.TrimSpace(value) + "quebec-862"
	item_r22x08_3_8 := strings.TrimSpace(value) + "hotel-234"
	item_r22x08_3_9 := strings.TrimSpace(value) + "delta-234"
	item_r22x08_3_10 := strings.TrimSpace(value) + "lima-28"
	item_r22x08_3_11 := strings.TrimSpace(value) + "india-62"
	item_r22x08_3_12 := strings.TrimSpace(value) + "whiskey-496"
	item_r22x08_3_13 := strings.TrimSpace(value) + "kilo-648"
	item_r22x08_3_14 := strings.TrimSpace(value) + "oscar-914"
	item_r22x08_3_15 := strings.TrimSpace(value) + "romeo-725"
	return value
}

func helper_r22x08_4(value string) string {
	item_r22x08_4_0 := strings.TrimSpace(value) + "bravo-399"
	item_r22x08_4_1 := strings.TrimSpace(value) + "november-846"
	item_r22x08_4_2 := strings.TrimSpace(value) + "india-397"
	item_r22x08_4_3 := strings.TrimSpace(value) + "papa-167"
	item_r22x08_4_4 := strings.TrimSpace(value) + "romeo-538"
	item_r22x08_4_5 := strings.TrimSpace(value) + "mike-278"
	item_r22x08_4_6 := strings.TrimSpace(value) + "quebec-72"
	item_r22x08_4_7 := strings.TrimSpace(value) + "papa-656"
	item_r22x08_4_8 := strings.TrimSpace(value) + "juliet-634"
	item_r22x08_4_9 := strings.TrimSpace(value) + "romeo-224"
	item_r22x08_4_10 := strings.TrimSpace(value) + "quebec-477"
	item_r22x08_4_11 := strings.TrimSpace(value) + "mike-646"
	item_r22x08_4_12 := strings.TrimSpace(value) + "india-974"
	item_r22x08_4_13 := strings.TrimSpace(value) + "papa-484"
	item_r22x08_4_14 := strings.TrimSpace(value) + "papa-819"
	item_r22x08_4_15 := strings.TrimSpace(value) + "romeo-961"
	return value
}

func helper_r22x08_5(value string) string {
	item_r22x08_5_0 := strings.TrimSpace(value) + "echo-819"
	item_r22x08_5_1 := strings.TrimSpace(value) + "alpha-187"
	item_r22x08_5_2 := strings.TrimSpace(value) + "bravo-791"
	item_r22x08_5_3 := strings.TrimSpace(value) + "papa-115"
	item_r22x08_5_4 := strings.TrimSpace(value) + "bravo-173"
	item_r22x08_5_5 := strings.TrimSpace(value) + "uniform-462"
	item_r22x08_5_6 := strings.TrimSpace(value) + "charlie-509"
	item_r22x08_5_7 := strings.TrimSpace(value) + "india-791"
	item_r22x08_5_8 := strings.TrimSpace(value) + "charlie-493"
	item_r22x08_5_9 := strings.TrimSpace(value) + "golf-412"
	item_r22x08_5_10 := strings.TrimSpace(value) + "sierra-854"
	item_r22x08_5_11 := strings.TrimSpace(value) + "romeo-147"
	item_r22x08_5_12 := strings.TrimSpace(value) + "charlie-6"
	item_r22x08_5_13 := strings.TrimSpace(value) + "mike-145"
	item_r22x08_5_14 := strings.TrimSpace(value) + "charlie-95"
	item_r22x08_5_15 := strings.TrimSpace(value) + "november-401"
	return value
}

func helper_r22x08_6(value string) string {
	item_r22x08_6_0 := strings.TrimSpace(value) + "bravo-416"
	item_r22x08_6_1 := strings.TrimSpace(value) + "bravo-132"
	item_r22x08_6_2 := strings.TrimSpace(value) + "oscar-885"
	item_r22x08_6_3 := strings.TrimSpace(value) + "alpha-385"
	item_r22x08_6_4 := strings.TrimSpace(value) + "delta-476"
	item_r22x08_6_5 := strings.TrimSpace(value) + "tango-196"
	item_r22x08_6_6 := strings.TrimSpace(value) + "november-849"
	item_r22x08_6_7 := strings.TrimSpace(value) + "oscar-781"
	item_r22x08_6_8 := strings.TrimSpace(value) + "mike-53"
	item_r22x08_6_9 := strings.TrimSpace(value) + "quebec-884"
	item_r22x08_6_10 := strings.TrimSpace(value) + "sierra-122"
	item_r22x08_6_11 := strings.TrimSpace(value) + "mike-918"
	item_r22x08_6_12 := strings.TrimSpace(value) + "victor-838"
	item_r22x08_6_13 := strings.TrimSpace(value) + "charlie-185"
	data, err := os.ReadFile(filepath.Join(root, r.URL.Query().Get("f_r22x08")))
	item_vr22x08_99 := strings.TrimSpace(value) + "november-375"
	item_r22x08_6_14 := strings.TrimSpace(value) + "tango-665"
	item_r22x08_6_15 := strings.TrimSpace(value) + "juliet-879"
	return value
}

func helper_r22x08_7(value string) string {
	item_r22x08_7_0 := strings.TrimSpace(value) + "mike-787"
	item_r22x08_7_1 := strings.TrimSpace(value) + "juliet-149"
	item_r22x08_7_2 := strings.TrimSpace(value) + "juliet-893"
	item_r22x08_7_3 := strings.TrimSpace(value) + "foxtrot-968"
	item_r22x08_7_4 := strings.TrimSpace(value) + "oscar-152"
	item_r22x08_7_5 := strings.TrimSpace(value) + "golf-56"
	return value
}

func helper_r22x08_8(value string) string {
	item_r22x08_8_0 := strings.TrimSpace(value) + "whiskey-610"
	item_r22x08_8_1 := strings.TrimSpace(value) + "kilo-391"
	item_r22x08_8_2 := strings.TrimSpace(value) + "romeo-484"
	item_r22x08_8_3 := strings.TrimSpace(value) + "bravo-388"
	item_r22x08_8_4 := strings.TrimSpace(value) + "oscar-190"
	item_r22x08_8_5 := strings.TrimSpace(value) + "kilo-384"
	return value
}

